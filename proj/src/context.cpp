#include "phasestar/context.hpp"

#include <algorithm>

namespace phasestar {

SeriesContext::SeriesContext(int dim, std::vector<ParamSpec> params)
    : dim_(dim), params_(std::move(params)) {
    if (dim_ < 1) throw Error("phase-space dimension N must be positive");
    std::sort(params_.begin(), params_.end(),
              [](const ParamSpec& a, const ParamSpec& b) { return a.name < b.name; });
    for (std::size_t k = 0; k < params_.size(); ++k) {
        if (params_[k].name.empty()) throw Error("empty parameter name");
        if (params_[k].order < 0) throw Error("negative truncation order");
        if (k > 0 && params_[k].name == params_[k - 1].name)
            throw Error("duplicate parameter name: " + params_[k].name);
    }
}

int SeriesContext::index_of(const std::string& name) const {
    for (std::size_t k = 0; k < params_.size(); ++k)
        if (params_[k].name == name) return static_cast<int>(k);
    return -1;
}

int SeriesContext::order_of(const std::string& name) const {
    int k = index_of(name);
    if (k < 0) throw UnknownParameter("unknown parameter: " + name);
    return params_[static_cast<std::size_t>(k)].order;
}

bool SeriesContext::compatible_with(const SeriesContext& o) const {
    if (dim_ != o.dim_ || params_.size() != o.params_.size()) return false;
    for (std::size_t k = 0; k < params_.size(); ++k)
        if (params_[k].name != o.params_[k].name) return false;
    return true;
}

SeriesContext SeriesContext::meet(const SeriesContext& a, const SeriesContext& b) {
    if (!a.compatible_with(b)) throw IncompatibleContext("series contexts do not match");
    std::vector<ParamSpec> ps = a.params_;
    for (std::size_t k = 0; k < ps.size(); ++k)
        ps[k].order = std::min(ps[k].order, b.params_[k].order);
    return SeriesContext(a.dim_, std::move(ps));
}

SeriesContext SeriesContext::join(const SeriesContext& a, const SeriesContext& b) {
    if (a.dim_ != b.dim_) throw IncompatibleContext("phase-space dimension mismatch");
    std::vector<ParamSpec> ps = a.params_;
    for (const auto& pb : b.params_) {
        bool found = false;
        for (auto& pa : ps) {
            if (pa.name == pb.name) {
                pa.order = std::min(pa.order, pb.order);
                found = true;
                break;
            }
        }
        if (!found) ps.push_back(pb);
    }
    return SeriesContext(a.dim_, std::move(ps));
}

SeriesContext SeriesContext::with_order(const std::string& name, int order) const {
    int k = index_of(name);
    if (k < 0) throw UnknownParameter("unknown parameter: " + name);
    std::vector<ParamSpec> ps = params_;
    ps[static_cast<std::size_t>(k)].order = order;
    return SeriesContext(dim_, std::move(ps));
}

SeriesContext SeriesContext::without_param(const std::string& name) const {
    int k = index_of(name);
    if (k < 0) throw UnknownParameter("unknown parameter: " + name);
    std::vector<ParamSpec> ps;
    for (std::size_t j = 0; j < params_.size(); ++j)
        if (j != static_cast<std::size_t>(k)) ps.push_back(params_[j]);
    return SeriesContext(dim_, std::move(ps));
}

} // namespace phasestar

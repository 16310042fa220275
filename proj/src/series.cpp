#include "pbsym/series.hpp"

#include <sstream>

namespace pbsym {

int GradedSeries::max_degree() const {
    if (comps_.empty()) throw value_error("empty series has no top degree");
    return comps_.rbegin()->first;
}

void GradedSeries::add(const Element& e) {
    if (e.is_zero()) return;
    int base = prefactor_graded_degree(e.mu(), e.nvars());
    for (const auto& [d, part] : e.poly().homogeneous_split())
        add_component(d + base, Element(part, e.mu(), e.gamma()));
}

void GradedSeries::add_component(int degree, const Element& e) {
    if (e.is_zero()) return;
    if (e.nvars() != nvars_) throw value_error("variable count mismatch in series");
    if (degree < cutoff_) {
        dropped_ = true;
        return;
    }
    auto it = comps_.find(degree);
    if (it == comps_.end()) {
        comps_.emplace(degree, e);
    } else {
        Element sum = it->second + e;
        if (sum.is_zero())
            comps_.erase(it);
        else
            it->second = sum;
    }
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const {
    if (nvars_ != o.nvars_) throw value_error("variable count mismatch in series sum");
    GradedSeries out(nvars_, std::max(cutoff_, o.cutoff_));
    out.dropped_ = dropped_ || o.dropped_;
    out.valid_above_ = std::max(valid_above_, o.valid_above_);
    for (const auto& [d, e] : comps_) out.add_component(d, e);
    for (const auto& [d, e] : o.comps_) out.add_component(d, e);
    return out;
}

GradedSeries GradedSeries::operator-(const GradedSeries& o) const {
    return *this + o.scaled(RadScalar(Rational(-1)));
}

GradedSeries GradedSeries::scaled(const RadScalar& c) const {
    GradedSeries out(nvars_, cutoff_);
    out.dropped_ = dropped_;
    out.valid_above_ = valid_above_;
    if (c.is_zero()) return out;
    for (const auto& [d, e] : comps_) out.comps_.emplace(d, e.scaled(c));
    return out;
}

Element GradedSeries::component(int degree) const {
    auto it = comps_.find(degree);
    return it == comps_.end() ? Element(nvars_) : it->second;
}

bool GradedSeries::is_zero_at_or_above(int degree) const {
    for (auto it = comps_.lower_bound(degree); it != comps_.end(); ++it)
        if (!it->second.is_zero()) return false;
    return true;
}

Element GradedSeries::to_element() const {
    Element sum(nvars_);
    for (const auto& [d, e] : comps_) sum = sum + e;
    return sum;
}

std::string GradedSeries::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto it = comps_.rbegin(); it != comps_.rend(); ++it) {
        if (!first) os << ", ";
        first = false;
        os << "deg " << it->first << ": " << it->second.str();
    }
    os << "}";
    if (dropped_) os << " (tail below " << cutoff_ << " dropped)";
    return os.str();
}

GradedSeries homogeneous_components(const Element& f, int cutoff) {
    GradedSeries s(f.nvars(), cutoff);
    s.add(f);
    return s;
}

}

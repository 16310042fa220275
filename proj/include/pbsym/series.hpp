#pragma once

#include "pbsym/element.hpp"

namespace pbsym {

// A function split by scaling degree, with degrees below a cutoff dropped.
// Each stored component is graded-homogeneous of its key degree. dropped()
// records whether anything was ever discarded. valid_above() is the smallest
// degree whose component is still exact after the truncated operations that
// produced this series (see the operator-exponential machinery): components
// at degrees >= valid_above() are trustworthy, lower retained degrees may
// have lost contributions from discarded tails.
class GradedSeries {
public:
    GradedSeries(int nvars, int cutoff)
        : nvars_(nvars), cutoff_(cutoff), valid_above_(cutoff), dropped_(false) {}

    int nvars() const { return nvars_; }
    int cutoff() const { return cutoff_; }
    bool dropped() const { return dropped_; }
    void mark_dropped() { dropped_ = true; }
    int valid_above() const { return valid_above_; }
    void raise_valid_above(int v) { valid_above_ = std::max(valid_above_, v); }

    bool empty() const { return comps_.empty(); }
    // Highest degree present; meaningful only when !empty().
    int max_degree() const;

    // Adds a (not necessarily homogeneous) element, splitting it by degree.
    void add(const Element& e);
    // Adds a component already known to be homogeneous of the given degree.
    void add_component(int degree, const Element& e);

    GradedSeries operator+(const GradedSeries& o) const;
    GradedSeries operator-(const GradedSeries& o) const;
    GradedSeries scaled(const RadScalar& c) const;

    Element component(int degree) const;  // zero element if absent
    const std::map<int, Element>& components() const { return comps_; }

    bool is_zero_at_or_above(int degree) const;
    // Sum of all retained components; requires them to be mutually addable.
    Element to_element() const;

    std::string str() const;

private:
    int nvars_;
    int cutoff_;
    int valid_above_;
    bool dropped_;
    std::map<int, Element> comps_;
};

// Splits an element into its graded-homogeneous components (the Gaussian
// factor is inherited by every component, not graded).
GradedSeries homogeneous_components(const Element& f, int cutoff);

}

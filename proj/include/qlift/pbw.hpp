#pragma once

#include <map>
#include <string>

#include "qlift/datum.hpp"

namespace qlift {

// PBW basis monomial x_1^{a_1} ... x_theta^{a_theta} g, group part rightmost.
struct PBWMono {
    std::vector<long> a;
    GrpElt g;

    long xdeg() const {
        long s = 0;
        for (long v : a) s += v;
        return s;
    }
    bool operator==(const PBWMono& o) const { return a == o.a && g.e == o.g.e; }
    bool operator<(const PBWMono& o) const {
        if (a != o.a) return a < o.a;
        return g.e < o.g.e;
    }
};

// Sparse scalar combination of PBW monomials.
using Element = std::map<PBWMono, Scalar>;

void elem_add(Element& dst, const PBWMono& m, const Scalar& c);
void elem_add(Element& dst, const Element& src, const Scalar& c);
Element elem_scale(const Element& e, const Scalar& c);

// "x1^2 x2 g^3" (single cyclic factor) or "x1 g1^2 g2" (several factors);
// the identity group part is omitted, the unit renders as "1".
std::string render_mono(const PBWMono& m, const FinAbGroup& G);
std::string render_element(const Element& e, const FinAbGroup& G);

// Inverse of render_mono; accepts any whitespace-separated factor list.
PBWMono parse_mono(const std::string& text, long theta, const FinAbGroup& G);

}  // namespace qlift

#include "qlift/pbw.hpp"

#include <sstream>

namespace qlift {

void elem_add(Element& dst, const PBWMono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = dst.find(m);
    if (it == dst.end()) {
        dst.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

void elem_add(Element& dst, const Element& src, const Scalar& c) {
    for (const auto& [m, v] : src) elem_add(dst, m, c * v);
}

Element elem_scale(const Element& e, const Scalar& c) {
    Element out;
    for (const auto& [m, v] : e) elem_add(out, m, c * v);
    return out;
}

std::string render_mono(const PBWMono& m, const FinAbGroup& G) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < m.a.size(); ++i) {
        if (m.a[i] == 0) continue;
        if (any) os << ' ';
        any = true;
        os << 'x' << (i + 1);
        if (m.a[i] > 1) os << '^' << m.a[i];
    }
    bool single = G.rank() == 1;
    for (size_t i = 0; i < m.g.e.size(); ++i) {
        if (m.g.e[i] == 0) continue;
        if (any) os << ' ';
        any = true;
        os << 'g';
        if (!single) os << (i + 1);
        if (m.g.e[i] > 1) os << '^' << m.g.e[i];
    }
    if (!any) return "1";
    return os.str();
}

std::string render_element(const Element& e, const FinAbGroup& G) {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.str() << ") " << render_mono(m, G);
    }
    return os.str();
}

PBWMono parse_mono(const std::string& text, long theta, const FinAbGroup& G) {
    PBWMono m;
    m.a.assign(theta, 0);
    m.g = G.identity();
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        size_t caret = tok.find('^');
        std::string head = caret == std::string::npos ? tok : tok.substr(0, caret);
        long exp = 1;
        if (caret != std::string::npos) {
            try {
                exp = std::stol(tok.substr(caret + 1));
            } catch (...) {
                throw InputError("bad exponent in monomial token: " + tok);
            }
        }
        if (head.size() < 1) throw InputError("empty factor in monomial: " + text);
        if (head[0] == 'x') {
            long idx;
            try {
                idx = std::stol(head.substr(1));
            } catch (...) {
                throw InputError("bad generator token: " + tok);
            }
            if (idx < 1 || idx > theta) throw InputError("generator index out of range: " + tok);
            m.a[idx - 1] += exp;
        } else if (head[0] == 'g') {
            long idx = 1;
            if (head.size() > 1) {
                try {
                    idx = std::stol(head.substr(1));
                } catch (...) {
                    throw InputError("bad group token: " + tok);
                }
            }
            if (idx < 1 || idx > G.rank()) throw InputError("group factor index out of range: " + tok);
            m.g.e[idx - 1] += exp;
        } else {
            throw InputError("unrecognized factor in monomial: " + tok);
        }
    }
    m.g = G.reduce(m.g);
    return m;
}

}  // namespace qlift

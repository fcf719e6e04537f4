#include "leghopf/surgery.hpp"

namespace leghopf::surgery {

namespace {

bool is_odd(const Int& v) { return (v % 2) != 0; }

Int checked_det(const SurgeryDiagram& d, const IntMatrix& m) {
    Int det = exact::det(m);
    if (det == 0) throw Error(Errc::SingularMatrix, "linking matrix is singular");
    if (d.s3 && det != 1 && det != -1)
        throw Error(Errc::NotS3, "diagram flagged as S^3 has det M = " + det.str());
    return det;
}

} // namespace

void SurgeryDiagram::validate() const {
    const std::size_t n = knots.size();
    if (offdiag.size() != n)
        throw Error(Errc::InvalidDiagram, "lk matrix size differs from knot count");
    if (!offdiag.is_symmetric()) throw Error(Errc::NotSymmetric, "lk matrix is not symmetric");
    for (std::size_t i = 0; i < n; ++i) {
        if (knots[i].coeff != 1 && knots[i].coeff != -1)
            throw Error(Errc::InvalidDiagram, "contact coefficient must be +1 or -1");
        if (!is_odd(knots[i].tb + knots[i].rot))
            throw Error(Errc::InvalidDiagram, "knot " + std::to_string(i) + ": tb + rot must be odd");
    }
    for (std::size_t c = 0; c < components.size(); ++c) {
        if (components[c].lk.size() != n)
            throw Error(Errc::InvalidDiagram, "component " + std::to_string(c) + ": lk length");
        if (!is_odd(components[c].tb + components[c].rot))
            throw Error(Errc::InvalidDiagram, "component " + std::to_string(c) + ": tb + rot must be odd");
    }
    if (!lk_pre.empty()) {
        if (lk_pre.size() != components.size())
            throw Error(Errc::InvalidDiagram, "lk_pre size differs from component count");
        for (std::size_t i = 0; i < lk_pre.size(); ++i) {
            if (lk_pre[i].size() != components.size())
                throw Error(Errc::InvalidDiagram, "lk_pre is not square");
            for (std::size_t j = 0; j < i; ++j)
                if (lk_pre[i][j] != lk_pre[j][i])
                    throw Error(Errc::NotSymmetric, "lk_pre is not symmetric");
        }
    }
}

IntMatrix linking_matrix(const SurgeryDiagram& d) {
    const std::size_t n = d.knots.size();
    if (d.offdiag.size() != n) throw Error(Errc::InvalidDiagram, "lk matrix size differs from knot count");
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = (i == j) ? Int(d.knots[i].tb + d.knots[i].coeff) : d.offdiag(i, j);
    if (!m.is_symmetric()) throw Error(Errc::NotSymmetric, "linking matrix is not symmetric");
    return m;
}

IntMatrix extended_matrix(const SurgeryDiagram& d, std::size_t i) {
    if (i >= d.components.size()) throw Error(Errc::IndexOutOfRange, "component index");
    IntMatrix m = linking_matrix(d);
    const std::size_t n = m.size();
    const IntVec& lk = d.components[i].lk;
    if (lk.size() != n) throw Error(Errc::InvalidDiagram, "component lk length");
    IntMatrix e(n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        e(0, r + 1) = lk[r];
        e(r + 1, 0) = lk[r];
        for (std::size_t c = 0; c < n; ++c) e(r + 1, c + 1) = m(r, c);
    }
    return e;
}

IntVec rot_vector(const SurgeryDiagram& d) {
    IntVec r;
    for (const auto& k : d.knots) r.push_back(k.rot);
    return r;
}

Rational tb_after(const SurgeryDiagram& d, std::size_t i) {
    if (i >= d.components.size()) throw Error(Errc::IndexOutOfRange, "component index");
    IntMatrix m = linking_matrix(d);
    Int det = checked_det(d, m);
    return Rational(d.components[i].tb) + Rational(exact::det(extended_matrix(d, i)), det);
}

Rational rot_after(const SurgeryDiagram& d, std::size_t i) {
    if (i >= d.components.size()) throw Error(Errc::IndexOutOfRange, "component index");
    IntMatrix m = linking_matrix(d);
    checked_det(d, m);
    RatVec y = exact::solve(m, d.components[i].lk);
    return Rational(d.components[i].rot) - exact::dot(y, rot_vector(d));
}

Rational lk_after(const SurgeryDiagram& d, std::size_t i, std::size_t j) {
    if (i >= d.components.size() || j >= d.components.size())
        throw Error(Errc::IndexOutOfRange, "component index");
    if (i == j) throw Error(Errc::IndexOutOfRange, "lk_after needs two distinct components");
    IntMatrix m = linking_matrix(d);
    checked_det(d, m);
    Rational pre = d.lk_pre.empty() ? Rational(0) : d.lk_pre[i][j];
    RatVec y = exact::solve(m, d.components[j].lk);
    return pre - exact::dot(y, d.components[i].lk);
}

D3Terms d3_terms(const SurgeryDiagram& d) {
    D3Terms t;
    for (std::size_t i = 0; i < d.knots.size(); ++i)
        if (d.knots[i].tb == 0)
            throw Error(Errc::ZeroTbKnot, "surgery knot " + std::to_string(i) + " has tb = 0");
    IntMatrix m = linking_matrix(d);
    checked_det(d, m);
    IntVec rot = rot_vector(d);
    t.c2 = exact::dot(exact::solve(m, rot), rot);
    t.sigma = exact::signature(m);
    t.chi = 1 + static_cast<int>(d.knots.size());
    for (const auto& k : d.knots)
        if (k.coeff == 1) ++t.q;
    t.d3 = (t.c2 - Rational(3 * t.sigma) - Rational(2 * t.chi)) / Rational(4) + Rational(t.q);
    return t;
}

Rational d3_after(const SurgeryDiagram& d) { return d3_terms(d).d3; }

ParityReport parity_check(const SurgeryDiagram& d) {
    ParityReport rep;
    IntMatrix m = linking_matrix(d);
    Int det = exact::det(m);
    rep.applicable = (det == 1 || det == -1);
    if (!rep.applicable) return rep;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        Rational s = tb_after(d, i) + rot_after(d, i);
        rep.sums.push_back(s);
        if (!s.is_integer() || !is_odd(s.to_int())) rep.ok = false;
    }
    if (!rep.ok) {
        std::string msg = "tb + rot not odd:";
        for (const auto& s : rep.sums) msg += " " + s.str();
        throw Error(Errc::ParityViolation, msg);
    }
    return rep;
}

Summary summarize(const SurgeryDiagram& d) {
    Summary s;
    s.det = exact::det(linking_matrix(d));
    s.d3 = d3_terms(d);
    const std::size_t nc = d.components.size();
    s.lk.assign(nc, std::vector<Rational>(nc, Rational(0)));
    for (std::size_t i = 0; i < nc; ++i) {
        s.tb.push_back(tb_after(d, i));
        s.rot.push_back(rot_after(d, i));
        for (std::size_t j = 0; j < nc; ++j)
            if (i != j) s.lk[i][j] = lk_after(d, i, j);
    }
    s.parity = parity_check(d);
    return s;
}

SurgeryDiagram reversed_components(const SurgeryDiagram& d) {
    SurgeryDiagram r = d;
    for (auto& c : r.components) {
        c.rot = -c.rot;
        for (auto& v : c.lk) v = -v;
        c.orientation = (c.orientation == "cw") ? "ccw" : "cw";
    }
    return r;
}

SurgeryDiagram reorient_knot(const SurgeryDiagram& d, std::size_t j) {
    if (j >= d.knots.size()) throw Error(Errc::IndexOutOfRange, "knot index");
    SurgeryDiagram r = d;
    r.knots[j].rot = -r.knots[j].rot;
    for (std::size_t i = 0; i < r.knots.size(); ++i) {
        if (i == j) continue;
        r.offdiag(i, j) = -r.offdiag(i, j);
        r.offdiag(j, i) = -r.offdiag(j, i);
    }
    for (auto& c : r.components) c.lk[j] = -c.lk[j];
    return r;
}

SurgeryDiagram permute_knots(const SurgeryDiagram& d, const std::vector<std::size_t>& perm) {
    const std::size_t n = d.knots.size();
    if (perm.size() != n) throw Error(Errc::DimensionMismatch, "permutation length");
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) throw Error(Errc::BadParams, "not a permutation");
        seen[p] = true;
    }
    SurgeryDiagram r = d;
    for (std::size_t i = 0; i < n; ++i) {
        r.knots[i] = d.knots[perm[i]];
        for (std::size_t j = 0; j < n; ++j) r.offdiag(i, j) = d.offdiag(perm[i], perm[j]);
    }
    for (std::size_t c = 0; c < d.components.size(); ++c)
        for (std::size_t i = 0; i < n; ++i) r.components[c].lk[i] = d.components[c].lk[perm[i]];
    return r;
}

} // namespace leghopf::surgery

#include "drazinkit/drazin.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "drazinkit/errors.hpp"
#include "drazinkit/quadruple_lab.hpp"

namespace drazinkit {

std::string_view to_string(InverseFlavor flavor) {
    switch (flavor) {
    case InverseFlavor::Drazin: return "drazin";
    case InverseFlavor::PDrazin: return "pdrazin";
    case InverseFlavor::GDrazin: return "gdrazin";
    case InverseFlavor::Group: return "group";
    }
    return "?";
}

InverseFlavor parse_flavor(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "drazin") return InverseFlavor::Drazin;
    if (lower == "pdrazin") return InverseFlavor::PDrazin;
    if (lower == "gdrazin") return InverseFlavor::GDrazin;
    if (lower == "group") return InverseFlavor::Group;
    fail(ErrorCode::ParseError, "unknown inverse flavor '" + std::string(text) + "'");
}

std::string_view to_string(GroupClassification c) {
    switch (c) {
    case GroupClassification::Invertible: return "invertible";
    case GroupClassification::GroupInverse: return "group";
    case GroupClassification::IndexTwo: return "index-two";
    case GroupClassification::NotApplicable: return "not-applicable";
    }
    return "?";
}

bool Transcript::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

namespace {

// Smallest k in [0, bound] with a^k - a^(k+1)·x satisfying `accept`.
template <typename Accept>
std::optional<std::size_t> residual_index(const SquareMatrix& a, const SquareMatrix& x,
                                          std::size_t bound, Accept accept) {
    const SquareMatrix one_minus_ax = SquareMatrix::identity(a.ring(), a.dim()) - a * x;
    SquareMatrix ak = SquareMatrix::identity(a.ring(), a.dim());
    for (std::size_t k = 0; k <= bound; ++k) {
        if (accept(ak * one_minus_ax)) return k;
        ak = ak * a;
    }
    return std::nullopt;
}

AxiomCheck check(std::string name, bool pass, std::string witness = {}) {
    return AxiomCheck{std::move(name), pass, std::move(witness)};
}

} // namespace

Transcript verify_axioms(const SquareMatrix& a, const SquareMatrix& x, InverseFlavor flavor) {
    require_compatible(a, x);
    Transcript t;

    const SquareMatrix ax = a * x;
    const SquareMatrix xa = x * a;
    if (ax == xa)
        t.checks.push_back(check("commutes", true));
    else
        t.checks.push_back(check("commutes", false, "a·x = " + ax.to_string() + ", x·a = " + xa.to_string()));

    const SquareMatrix xax = xa * x;
    if (xax == x)
        t.checks.push_back(check("outer", true));
    else
        t.checks.push_back(check("outer", false, "x·a·x = " + xax.to_string()));

    const SquareMatrix residual = a - a * ax;
    const std::size_t bound = a.ring().nilpotency_bound(a.dim());
    const auto vanishes = [](const SquareMatrix& m) { return m.is_zero(); };

    switch (flavor) {
    case InverseFlavor::Drazin:
    case InverseFlavor::Group: {
        const auto degree = nilpotency_degree(residual);
        t.checks.push_back(check("nilpotent_residual", degree.has_value(),
                                 degree ? "(a - a²x)^" + std::to_string(*degree) + " = 0"
                                        : "a - a²x = " + residual.to_string() + " is not nilpotent"));
        t.index = residual_index(a, x, bound, vanishes);
        if (flavor == InverseFlavor::Group) {
            const bool ok = t.index && *t.index <= 1;
            t.checks.push_back(check("index_at_most_one", ok,
                                     t.index ? "index " + std::to_string(*t.index) : "no index"));
        }
        break;
    }
    case InverseFlavor::PDrazin: {
        t.index = residual_index(a, x, bound, [](const SquareMatrix& m) { return in_radical(m); });
        t.checks.push_back(check("radical_residual", t.index.has_value(),
                                 t.index ? "a^k - a^(k+1)x in radical at k = " + std::to_string(*t.index)
                                         : "no k <= " + std::to_string(bound) + " reaches the radical"));
        break;
    }
    case InverseFlavor::GDrazin: {
        if (a.ring().is_finite()) {
            const auto w = qnil_witness(residual);
            t.checks.push_back(check("quasinilpotent_residual", !w.has_value(),
                                     w ? "1 + (a - a²x)·y singular for y = " + w->to_string() : "by definition"));
        } else {
            const auto degree = nilpotency_degree(residual);
            t.checks.push_back(check("quasinilpotent_residual", degree.has_value(),
                                     degree ? "nilpotent, degree " + std::to_string(*degree)
                                            : "a - a²x = " + residual.to_string() + " is not nilpotent"));
        }
        t.index = residual_index(a, x, bound, vanishes);
        break;
    }
    }
    return t;
}

DrazinCertificate certify(const SquareMatrix& a, const SquareMatrix& x, InverseFlavor flavor) {
    Transcript t = verify_axioms(a, x, flavor);
    const bool ok = t.passed();
    return DrazinCertificate{a, x, flavor, t.index, std::move(t.checks), ok};
}

std::size_t index_of(const SquareMatrix& a) {
    if (!a.ring().is_field()) fail(ErrorCode::NotAField, "index_of requires a field, got " + a.ring().name());
    SquareMatrix power = SquareMatrix::identity(a.ring(), a.dim());
    std::size_t current = a.dim();
    for (std::size_t k = 0;; ++k) {
        power = power * a;
        const std::size_t next = rank(power);
        if (next == current) return k;
        current = next;
    }
}

DrazinCertificate drazin_inverse(const SquareMatrix& a) {
    if (!a.ring().is_field())
        fail(ErrorCode::NotAField, "Drazin inverse construction requires a field, got " + a.ring().name());
    const std::size_t k = index_of(a);
    const SquareMatrix ak = a.power(k);
    const SquareMatrix x = ak * inner_inverse(a.power(2 * k + 1)) * ak;
    DrazinCertificate cert = certify(a, x, InverseFlavor::Drazin);
    if (!cert.valid || cert.index != k)
        fail(ErrorCode::FormulaViolation, "Drazin construction failed verification for " + a.to_string());
    return cert;
}

DrazinCertificate group_inverse(const SquareMatrix& a) {
    if (!a.ring().is_field())
        fail(ErrorCode::NotAField, "group inverse construction requires a field, got " + a.ring().name() +
                                       "; supply a candidate to verify instead");
    const DrazinCertificate d = drazin_inverse(a);
    if (*d.index > 1)
        fail(ErrorCode::NoGroupInverse,
             a.to_string() + " has index " + std::to_string(*d.index) + ", so no group inverse");
    return certify(a, d.inverse, InverseFlavor::Group);
}

DrazinCertificate group_inverse(const SquareMatrix& a, const SquareMatrix& candidate) {
    return certify(a, candidate, InverseFlavor::Group);
}

namespace {

RelationCheck relation(std::string name, SquareMatrix lhs, SquareMatrix rhs) {
    RelationCheck r{std::move(name), lhs, rhs, lhs == rhs, {}};
    for (std::size_t i = 0; i < lhs.dim(); ++i)
        for (std::size_t j = 0; j < lhs.dim(); ++j)
            if (!(lhs(i, j) == rhs(i, j))) r.differing.emplace_back(i, j);
    return r;
}

} // namespace

IntertwiningReport verify_intertwining(const SquareMatrix& a, const SquareMatrix& b, const SquareMatrix& c,
                                       const SquareMatrix& d) {
    require_compatible(a, b);
    require_compatible(a, c);
    require_compatible(a, d);
    IntertwiningReport report;
    const SquareMatrix ac = a * c;
    report.relations.push_back(relation("bdb = bac", b * d * b, b * ac));
    report.relations.push_back(relation("dbd = acd", d * b * d, ac * d));
    if (report.relations[0].holds && report.relations[1].holds) report.quadruple = Quadruple(a, b, c, d);
    return report;
}

std::string IntertwiningReport::describe() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < relations.size(); ++k) {
        const auto& r = relations[k];
        if (k) os << "; ";
        const auto eq = r.relation.find(" = ");
        const std::string lhs = r.relation.substr(0, eq);
        const std::string rhs = r.relation.substr(eq + 3);
        if (r.holds) {
            os << lhs << " = " << rhs << " = " << r.lhs.to_string();
        } else {
            os << lhs << " = " << r.lhs.to_string() << " != " << r.rhs.to_string() << " = " << rhs << " at";
            for (auto [i, j] : r.differing) os << " (" << i << "," << j << ")";
        }
    }
    return os.str();
}

Quadruple make_quadruple(const SquareMatrix& a, const SquareMatrix& b, const SquareMatrix& c,
                         const SquareMatrix& d) {
    IntertwiningReport report = verify_intertwining(a, b, c, d);
    if (!report.accepted()) fail(ErrorCode::RelationViolation, report.describe());
    return *report.quadruple;
}

Quadruple Quadruple::scaled(const Rational& lambda) const {
    if (lambda.is_zero()) fail(ErrorCode::ZeroLambda, "scaling by zero");
    if (ring().kind() != RingSpec::Kind::Rationals)
        fail(ErrorCode::UnsupportedRing, "scaling needs Q, got " + ring().name());
    const Rational inv = lambda.reciprocal();
    return make_quadruple(a_.scaled(inv), b_, c_, d_.scaled(inv));
}

ClineResult cline_generalized(const Quadruple& q, InverseFlavor flavor) {
    const SquareMatrix ac = q.ac();
    if (q.ring().is_field()) {
        const DrazinCertificate h = drazin_inverse(ac);
        if (flavor == InverseFlavor::Group && *h.index > 1)
            fail(ErrorCode::NoGroupInverse,
                 "ac = " + ac.to_string() + " has index " + std::to_string(*h.index) + ", so no group inverse");
        return cline_generalized(q, flavor, h.inverse);
    }
    if (q.ring().is_finite()) {
        const auto found = brute_force_inverse(ac, flavor);
        if (found.empty())
            fail(flavor == InverseFlavor::Group ? ErrorCode::NoGroupInverse : ErrorCode::NoInverse,
                 "ac = " + ac.to_string() + " has no " + std::string(to_string(flavor)) + " inverse in " +
                     q.ring().name());
        return cline_generalized(q, flavor, found.front().inverse);
    }
    fail(ErrorCode::NotAField, "no construction path over " + q.ring().name() + "; supply h explicitly");
}

ClineResult cline_generalized(const Quadruple& q, InverseFlavor flavor, const SquareMatrix& h) {
    const InverseFlavor bd_flavor = flavor == InverseFlavor::Group ? InverseFlavor::Drazin : flavor;
    ClineResult r{certify(q.ac(), h, flavor), certify(q.bd(), q.b() * h * h * q.d(), bd_flavor), false,
                  GroupClassification::NotApplicable};
    if (r.ac.index && r.bd.index) {
        const std::size_t iac = *r.ac.index;
        const std::size_t ibd = *r.bd.index;
        r.index_bound_holds = ibd <= iac + 1;
        if (flavor != InverseFlavor::PDrazin && iac <= 1 && ibd <= 2)
            r.classification = ibd == 0 ? GroupClassification::Invertible
                               : ibd == 1 ? GroupClassification::GroupInverse
                                          : GroupClassification::IndexTwo;
    }
    return r;
}

DrazinCertificate cline_classical(const SquareMatrix& a, const SquareMatrix& b) {
    if (!a.ring().is_field())
        fail(ErrorCode::NotAField, "classical Cline construction requires a field, got " + a.ring().name());
    return cline_generalized(make_quadruple(a, b, b, a), InverseFlavor::Drazin).bd;
}

SquareMatrix jacobson_inverse(const Quadruple& q) {
    const SquareMatrix one = SquareMatrix::identity(q.ring(), q.dim());
    const SquareMatrix inv = [&] {
        try {
            return inverse(one - q.ac());
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotInvertible) throw;
            fail(ErrorCode::NotInvertible, std::string("1 - ac is not invertible: ") + e.what());
        }
    }();
    const SquareMatrix result = one + q.b() * inv * q.d();
    const SquareMatrix target = one - q.bd();
    if (!(target * result).is_identity() || !(result * target).is_identity())
        fail(ErrorCode::FormulaViolation,
             "1 + b(1-ac)^(-1)d = " + result.to_string() + " does not invert 1 - bd = " + target.to_string());
    return result;
}

} // namespace drazinkit

#include "drazinkit/json_io.hpp"

namespace drazinkit::json_io {

namespace {

Rational scalar_from_json(const RingSpec& ring, const Json& j) {
    Rational value;
    if (j.is_string()) {
        value = Rational::parse(j.get<std::string>());
    } else if (j.is_number_integer()) {
        value = Rational(j.get<std::int64_t>());
    } else {
        fail(ErrorCode::ParseError, "scalar must be a string or an integer, got " + j.dump());
    }
    if (ring.is_finite()) {
        const auto v = value.to_int64();
        if (!v || *v < 0 || *v >= ring.modulus())
            fail(ErrorCode::ParseError, "scalar " + value.to_string() + " is not a residue in [0, " +
                                            std::to_string(ring.modulus()) + ")");
    }
    return ring.reduce(value);
}

std::int64_t positive_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) fail(ErrorCode::ParseError, std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

} // namespace

Json ring_to_json(const RingSpec& ring) {
    switch (ring.kind()) {
    case RingSpec::Kind::Rationals: return "Q";
    case RingSpec::Kind::Integers: return "Z";
    case RingSpec::Kind::PrimeField: return Json{{"GF", ring.modulus()}};
    case RingSpec::Kind::ResidueRing: return Json{{"Zmod", ring.modulus()}};
    }
    return nullptr;
}

RingSpec ring_from_json(const Json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "Q") return RingSpec::rationals();
        if (s == "Z") return RingSpec::integers();
    } else if (j.is_object() && j.size() == 1) {
        if (j.contains("GF")) return RingSpec::prime_field(positive_int(j["GF"], "GF modulus"));
        if (j.contains("Zmod")) return RingSpec::residue_ring(positive_int(j["Zmod"], "Zmod modulus"));
    }
    fail(ErrorCode::ParseError, "unrecognized ring " + j.dump());
}

Json rows_to_json(const SquareMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json matrix_to_json(const SquareMatrix& m) { return Json{{"ring", ring_to_json(m.ring())}, {"rows", rows_to_json(m)}}; }

SquareMatrix rows_from_json(const RingSpec& ring, const Json& rows) {
    if (!rows.is_array() || rows.empty()) fail(ErrorCode::ParseError, "rows must be a nonempty array");
    SquareMatrix::Rows out;
    for (const auto& row : rows) {
        if (!row.is_array()) fail(ErrorCode::ParseError, "each row must be an array");
        std::vector<Rational> r;
        for (const auto& e : row) r.push_back(scalar_from_json(ring, e));
        out.push_back(std::move(r));
    }
    return SquareMatrix(ring, out);
}

SquareMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("rows"))
        fail(ErrorCode::ParseError, "matrix needs \"ring\" and \"rows\"");
    return rows_from_json(ring_from_json(j["ring"]), j["rows"]);
}

Json quadruple_to_json(const Quadruple& q) {
    return Json{{"ring", ring_to_json(q.ring())},
                {"a", rows_to_json(q.a())},
                {"b", rows_to_json(q.b())},
                {"c", rows_to_json(q.c())},
                {"d", rows_to_json(q.d())}};
}

std::array<SquareMatrix, 4> quadruple_matrices_from_json(const Json& j) {
    if (!j.is_object()) fail(ErrorCode::ParseError, "quadruple must be an object");
    std::optional<RingSpec> shared;
    if (j.contains("ring")) shared = ring_from_json(j["ring"]);
    auto one = [&](const char* key) {
        if (!j.contains(key)) fail(ErrorCode::ParseError, std::string("quadruple is missing \"") + key + "\"");
        const Json& v = j[key];
        if (v.is_object()) return matrix_from_json(v);
        if (!shared) fail(ErrorCode::ParseError, "quadruple rows given without a \"ring\"");
        return rows_from_json(*shared, v);
    };
    return {one("a"), one("b"), one("c"), one("d")};
}

Json poly_to_json(const Poly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.to_string());
    return Json{{"coefficients", coeffs}, {"text", p.to_string("λ")}};
}

Json certificate_to_json(const DrazinCertificate& cert) {
    Json transcript = Json::array();
    for (const auto& c : cert.transcript)
        transcript.push_back(Json{{"check", c.check}, {"pass", c.pass}, {"witness", c.witness}});
    Json out{{"element", matrix_to_json(cert.element)},
             {"inverse", matrix_to_json(cert.inverse)},
             {"flavor", std::string(to_string(cert.flavor))}};
    out["index"] = cert.index ? Json(*cert.index) : Json(nullptr);
    out["valid"] = cert.valid;
    out["transcript"] = std::move(transcript);
    return out;
}

Json intertwining_to_json(const IntertwiningReport& report) {
    Json relations = Json::array();
    for (const auto& r : report.relations) {
        Json differing = Json::array();
        for (auto [i, j] : r.differing) differing.push_back(Json::array({i, j}));
        relations.push_back(Json{{"relation", r.relation},
                                 {"holds", r.holds},
                                 {"lhs", rows_to_json(r.lhs)},
                                 {"rhs", rows_to_json(r.rhs)},
                                 {"differing", differing}});
    }
    return Json{{"accepted", report.accepted()}, {"relations", relations}, {"summary", report.describe()}};
}

Json cline_to_json(const ClineResult& result) {
    return Json{{"valid", result.valid()},
                {"ac", certificate_to_json(result.ac)},
                {"bd", certificate_to_json(result.bd)},
                {"index_bound_holds", result.index_bound_holds},
                {"classification", std::string(to_string(result.classification))}};
}

Json spectrum_to_json(const SpectrumSummary& s) {
    return Json{{"char_poly", poly_to_json(s.char_poly)},
                {"zero_multiplicity", s.zero_multiplicity},
                {"nonzero_part_squarefree", poly_to_json(s.nonzero_part_squarefree)}};
}

Json comparison_to_json(const SpectrumComparison& cmp) {
    return Json{{"equal", cmp.equal},
                {"multiplicities_equal", cmp.multiplicities_equal},
                {"second_within_first", cmp.second_within_first},
                {"first", spectrum_to_json(cmp.first)},
                {"second", spectrum_to_json(cmp.second)}};
}

Json transfer_to_json(const InvertibilityTransfer& transfer) {
    Json verdicts = Json::array();
    for (const auto& v : transfer.verdicts)
        verdicts.push_back(Json{{"lambda", v.lambda.to_string()},
                                {"ac_side_invertible", v.ac_side_invertible},
                                {"bd_side_invertible", v.bd_side_invertible},
                                {"formula_checked", v.formula_checked},
                                {"formula_inverts", v.formula_inverts},
                                {"drazin_spectra_empty", v.drazin_spectra_empty},
                                {"forward_holds", v.forward_holds()},
                                {"reverse_holds", v.reverse_holds()}});
    return Json{{"forward_holds", transfer.forward_holds()},
                {"reverse_holds", transfer.reverse_holds()},
                {"verdicts", verdicts}};
}

Json qnil_to_json(const QnilTransferReport& report) {
    Json out{{"ac_qnil", report.ac_qnil}, {"bd_qnil", report.bd_qnil}, {"pass", report.pass()}};
    out["witness"] = report.witness ? matrix_to_json(*report.witness) : Json(nullptr);
    return out;
}

Json error_to_json(const Error& e) {
    return Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
}

} // namespace drazinkit::json_io

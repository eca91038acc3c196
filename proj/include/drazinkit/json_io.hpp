#pragma once

#include <array>
#include <optional>

#include <json.hpp>

#include "drazinkit/drazin.hpp"
#include "drazinkit/errors.hpp"
#include "drazinkit/quadruple_lab.hpp"
#include "drazinkit/spectral.hpp"

// Wire formats:
//   ring     "Q" | "Z" | {"GF": p} | {"Zmod": n}
//   matrix   {"ring": <ring>, "rows": [["1/2", "0"], ...]}
//   quad     {"ring": <ring>, "a": <rows>, "b": ..., "c": ..., "d": ...}
//            (each of a..d may instead be a full matrix object)
// Scalars are strings in "p" or "p/q" form; integer JSON numbers are also
// accepted on input. Residues over GF(p) and Z/n must lie in [0, modulus).
namespace drazinkit::json_io {

using Json = nlohmann::ordered_json;

Json ring_to_json(const RingSpec& ring);
RingSpec ring_from_json(const Json& j);

Json rows_to_json(const SquareMatrix& m);
Json matrix_to_json(const SquareMatrix& m);
SquareMatrix matrix_from_json(const Json& j);
SquareMatrix rows_from_json(const RingSpec& ring, const Json& rows);

Json quadruple_to_json(const Quadruple& q);
std::array<SquareMatrix, 4> quadruple_matrices_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Json certificate_to_json(const DrazinCertificate& cert);
Json intertwining_to_json(const IntertwiningReport& report);
Json cline_to_json(const ClineResult& result);
Json spectrum_to_json(const SpectrumSummary& s);
Json comparison_to_json(const SpectrumComparison& cmp);
Json transfer_to_json(const InvertibilityTransfer& transfer);
Json qnil_to_json(const QnilTransferReport& report);
Json error_to_json(const Error& e);

} // namespace drazinkit::json_io

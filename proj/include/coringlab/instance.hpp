#pragma once

#include <string>

#include "coringlab/coring.hpp"

namespace coringlab {

// A loaded instance file: the validated context plus its bounds.
struct Instance {
  std::string origin;  // file path or label
  std::string hash;    // FNV-1a 64 of the source bytes, hex
  std::string name;
  CoringCtx ctx;
  EnumerationBounds bounds;
};

// Parses and validates an instance description. Errors are ValidationError
// (or VariantError for an unsupported combination) whose message starts with
// the origin and either a line number or a JSON path such as
// $.coaction.degrees[1].
//
// Schema:
//   field    {"kind": "prime", "p": 2} | {"kind": "rationals"}
//   algebra  {"preset": "ground_field" | "dual_numbers" |
//                       "truncated_poly", "k": 3 |
//                       "product_of_fields", "n": 2 |
//                       "fp_field_ext", "poly": [c0, c1, ..., 1], "variable": "w"}
//            | {"basis": [names], "unit": [coords],
//               "mult": [[[coords of e_i e_j] ...] ...]}
//   hopf     {"type": "group_basis" | "dual",
//             "group": {"preset": "integers"} | {"preset": "cyclic_group", "n": 2}
//                      | {"table": [[...]], "names": [...]}}
//   coaction {"degrees": [d per basis vector]}               (group_basis)
//            | {"action": "trivial" | "frobenius"}           (dual)
//            | {"action": {"matrices": [M_g per group element]}}
//   bounds   {"window": [lo, hi], "cap": 4096}               (optional)
//   name     optional label
// Scalars are integers or strings such as "1/2". Degrees and group elements
// are integers (indices or Z-degrees) or group element names. Action matrices
// are row-major and act on coordinate columns; for "frobenius" the k-th
// power of the generator of a cyclic group acts by the k-th Frobenius power.
Instance parse_instance(const std::string& text, const std::string& origin);
Instance load_instance(const std::string& path);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace coringlab

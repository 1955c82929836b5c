#pragma once

#include <vector>

#include "ghom/coefficients.hpp"
#include "ghom/int_matrix.hpp"

namespace ghom {

// Adjacency matrix of a shift of finite type: square, nonnegative, no zero
// row and no zero column.
struct SftSpec {
    IntMatrix matrix;
};

// Throws ValidationError naming the offending row or column index.
void validate_sft(const SftSpec& spec);

// Closed-form homology of the associated Deaconu-Renault groupoid:
// H_0 = coker(1 - A^T), H_1 = ker(1 - A^T), H_n = 0 for n >= 2.
HomologyResult sft_homology(const SftSpec& spec, long max_degree);

FgAbGroup sft_homology_with_coefficients(const SftSpec& spec, const CoefficientSpec& a, long n);

// Degreewise direct sum over the parts; equals the block-diagonal route.
HomologyResult sft_disjoint_union(const std::vector<SftSpec>& parts, long max_degree);

IntMatrix one_minus_transpose(const IntMatrix& a);

}  // namespace ghom

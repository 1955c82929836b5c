#include "ghom/sft.hpp"

#include <string>

#include "ghom/normal_forms.hpp"
#include "ghom/sequences.hpp"

namespace ghom {

void validate_sft(const SftSpec& spec) {
    const IntMatrix& a = spec.matrix;
    if (a.rows() != a.cols()) throw ValidationError("sft: adjacency matrix must be square");
    if (a.rows() == 0) throw ValidationError("sft: adjacency matrix must be nonempty");
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            if (a.at(i, j) < 0) throw ValidationError("sft: negative entry at row " + std::to_string(i));
    for (long i = 0; i < a.rows(); ++i) {
        bool nonzero = false;
        for (long j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0) nonzero = true;
        if (!nonzero) throw ValidationError("sft: zero row " + std::to_string(i));
    }
    for (long j = 0; j < a.cols(); ++j) {
        bool nonzero = false;
        for (long i = 0; i < a.rows(); ++i)
            if (a.at(i, j) != 0) nonzero = true;
        if (!nonzero) throw ValidationError("sft: zero column " + std::to_string(j));
    }
}

IntMatrix one_minus_transpose(const IntMatrix& a) {
    return IntMatrix::identity(a.rows()) - a.transpose();
}

HomologyResult sft_homology(const SftSpec& spec, long max_degree) {
    validate_sft(spec);
    IntMatrix m = one_minus_transpose(spec.matrix);
    HomologyResult r;
    r.coeff = CoefficientSpec::integers();
    if (max_degree >= 0) r.groups.push_back(cokernel_group(m));
    if (max_degree >= 1) r.groups.push_back(FgAbGroup::free_group(integer_kernel(m).cols()));
    for (long n = 2; n <= max_degree; ++n) r.groups.push_back(FgAbGroup::trivial());
    return r;
}

FgAbGroup sft_homology_with_coefficients(const SftSpec& spec, const CoefficientSpec& a, long n) {
    HomologyResult integral = sft_homology(spec, n);
    if (a.is_integers()) return integral.groups[static_cast<size_t>(n)];
    return uct_homology(integral, a, n).middle;
}

HomologyResult sft_disjoint_union(const std::vector<SftSpec>& parts, long max_degree) {
    HomologyResult r;
    r.coeff = CoefficientSpec::integers();
    std::vector<HomologyResult> each;
    for (const SftSpec& p : parts) each.push_back(sft_homology(p, max_degree));
    for (long n = 0; n <= max_degree; ++n) {
        std::vector<FgAbGroup> summands;
        for (const auto& h : each) summands.push_back(h.groups[static_cast<size_t>(n)]);
        r.groups.push_back(direct_sum(summands));
    }
    return r;
}

}  // namespace ghom

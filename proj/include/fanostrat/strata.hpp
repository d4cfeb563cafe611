#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fanostrat {

/// Normal bundle splitting type (a_1 <= ... <= a_{n-2}) of a line on a
/// degree-d hypersurface in P^n. Entries are kept ascending; construction
/// rejects anything violating a_i <= 1 and sum a_i = n - d - 1.
class SplittingType {
   public:
    SplittingType() = default;
    /// Sorts the entries, then validates admissibility (throws DomainError).
    SplittingType(int n, int d, std::vector<int> entries);

    int n() const noexcept { return n_; }
    int d() const noexcept { return d_; }
    const std::vector<int>& entries() const noexcept { return entries_; }
    int rank() const noexcept { return n_ - 2; }

    bool is_balanced() const;
    /// Multiplicity of each value among the entries.
    std::map<int, int> multiplicities() const;
    int count(int value) const;
    /// Prefix sums a_1, a_1 + a_2, ...
    std::vector<int> partial_sums() const;

    /// "(-1,-1,1)"
    std::string to_string() const;

    friend auto operator<=>(const SplittingType&, const SplittingType&) = default;

   private:
    int n_ = 3, d_ = 1;
    std::vector<int> entries_{1};
};

/// u(a) = sum_{i<j} max(a_j - a_i - 1, 0), the expected codimension.
int expected_codimension(const SplittingType& a);
/// h^0(O(a) (x) O(i)) = sum_j max(0, a_j + i + 1).
int twisted_sections(const SplittingType& a, int i);
/// Expected rank of C(i): (i+2)(n-1) - twisted_sections(a, i).
int expected_rank(const SplittingType& a, int i);

/// lower <= upper in the specialization order (prefix sums dominated).
bool is_specialization(const SplittingType& lower, const SplittingType& upper);

/// All admissible types for (n, d), most general (balanced) first: sorted by
/// prefix-sum vectors, descending lexicographically.
std::vector<SplittingType> enumerate_types(int n, int d);

SplittingType balanced_type(int n, int d);

struct DimensionReport {
    int codim = 0;
    /// 2n - d - 3 - u; negative means generically empty.
    int expected_dim = 0;
    bool generically_empty = false;
    /// Upper bound on dim F_a(X) valid for every smooth X, when one is known
    /// for this shape.
    std::optional<int> dimension_bound;
    std::string bound_shape;  // "completely_unbalanced" or "almost_completely_unbalanced"
};

DimensionReport expected_dimension(const SplittingType& a);

struct StrataPoset {
    int n = 0, d = 0;
    std::vector<SplittingType> nodes;
    /// (lower, upper) index pairs of the transitive reduction.
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    std::vector<int> codims;
};

StrataPoset build_poset(int n, int d);
/// digraph strata { "(a)" -> "(b)"; ... } with nodes labelled "(a) | u=k".
std::string emit_hasse_dot(const StrataPoset& poset);

}  // namespace fanostrat

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchparity/graph.hpp"
#include "matchparity/matching.hpp"
#include "matchparity/region.hpp"

namespace mpar {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const;
    bool is_diagonal() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<BigInt> a_;
};

struct SmithDecomposition {
    IntMatrix S, D, T;  // A = S * D * T
    std::vector<BigInt> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);
bool is_smith_form(const IntMatrix& d);

BigInt determinant(const IntMatrix& a);  // fraction-free Bareiss

std::size_t two_nullity(const IntMatrix& a);      // via GF(2) rank
std::size_t two_nullity_snf(const IntMatrix& a);  // via the SNF diagonal

// Percus signing: rows white, columns black (row-major order); horizontal edges +1,
// the vertical edge in column x carries (-1)^x.
IntMatrix kasteleyn_sign_grid(const GridRegion& r);
BigInt count_matchings_kasteleyn(const GridRegion& r);

enum class GuaranteeStatus { Proven, SigningAssumed, Verified, Invalid, Vacuous };
const char* status_name(GuaranteeStatus s);

struct DivisibilityReport {
    std::string graph_id;
    std::size_t dim_C = 0;
    std::optional<std::size_t> dim_C_B, dim_C_W;
    // Exponent e with 2^e | target; nullopt means m_G = 0 (every power divides).
    std::optional<std::size_t> guaranteed_exponent;
    std::string target;  // "m_G" or "m_G^2"
    GuaranteeStatus status = GuaranteeStatus::Proven;
    std::string caveat;
    std::optional<BigInt> exact_count;
    std::optional<std::size_t> exact_valuation;  // absent when the count is 0 or unknown
    std::string count_method;
};

struct ReportOptions {
    std::optional<std::size_t> count_cap;  // brute-force oracle vertex cap
};

DivisibilityReport divisibility_report(const GridRegion& r, const ReportOptions& opt = {});
DivisibilityReport divisibility_report(const Graph& g, const ReportOptions& opt = {});

}  // namespace mpar

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "schatten/cmatrix.hpp"
#include "schatten/spectral.hpp"

namespace schatten {

// Finite weighted family of square operators sharing one dimension, with a
// primary weight sequence and an optional secondary one (defaults to ones).
// Weights are strictly positive; zero-weight members must be dropped by the
// caller before construction.
class WeightedFamily {
public:
    WeightedFamily(std::vector<CMatrix> members, std::vector<double> primary_weights,
                   std::optional<std::vector<double>> secondary_weights = std::nullopt);

    static WeightedFamily with_unit_weights(std::vector<CMatrix> members);

    int length() const noexcept { return int(members_.size()); }
    int dim() const noexcept { return dim_; }
    const CMatrix& member(int n) const { return members_[std::size_t(n)]; }
    const std::vector<CMatrix>& members() const noexcept { return members_; }
    double primary(int n) const { return primary_[std::size_t(n)]; }
    double secondary(int n) const { return secondary_[std::size_t(n)]; }
    const std::vector<double>& primary_weights() const noexcept { return primary_; }
    const std::vector<double>& secondary_weights() const noexcept { return secondary_; }

    // same members, new weights
    WeightedFamily reweighted(std::vector<double> primary,
                              std::optional<std::vector<double>> secondary = std::nullopt) const;

private:
    std::vector<CMatrix> members_;
    std::vector<double> primary_;
    std::vector<double> secondary_;
    int dim_;
};

enum class GramSide { left, right };  // left: sum M M*, right: sum M* M

// sum_n primary_n^weight_exponent * (A_n* A_n); Hermitian PSD by construction.
CMatrix gram_right(const WeightedFamily& f, double weight_exponent);
// sum_n primary_n^weight_exponent * (A_n A_n*)
CMatrix gram_left(const WeightedFamily& f, double weight_exponent);
CMatrix gram(const WeightedFamily& f, GramSide side, double weight_exponent);

// Block operator-matrix norms. row_norm is the norm of the 1xN block row
// [A_1 ... A_N], equal to ||sum A_n A_n*||^(1/2); column_norm is the norm of
// the Nx1 block column, equal to ||sum A_n* A_n||^(1/2).
double row_norm(const WeightedFamily& f);
double column_norm(const WeightedFamily& f);

enum class WeightPower { linear, sqrt };  // weight power inside the Gram sums

// max(||sum lam_n A_n* A_n||^(1/2), ||sum rho_n A_n A_n*||^(1/2))
double module_max_norm(const WeightedFamily& f, const std::vector<double>& lam,
                       const std::vector<double>& rho,
                       WeightPower power = WeightPower::linear);

// Rank-one families (e_n (x) e_1)_{n<count} and (f_n (x) f_1)_{n<count} built
// from two orthonormal bases given as the columns of unitary matrices.
// Weights are all ones; reweight as needed. Throws CountTooLarge.
std::pair<WeightedFamily, WeightedFamily> rank_one_family(const CMatrix& e_basis,
                                                          const CMatrix& f_basis,
                                                          int count);

// Operator norm of the Gram sum restricted to indices >= from (1-based);
// from = length+1 gives the empty sum. Throws IndexOutOfRange.
double tail_norm(const WeightedFamily& f, int from, GramSide side,
                 double weight_exponent);

}  // namespace schatten

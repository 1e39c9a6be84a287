#ifndef ETALE_LINALG_HPP
#define ETALE_LINALG_HPP

#include <vector>

#include "etale/field.hpp"

namespace etale {

// Dense row-major matrix over a finite field.
class Mat {
  public:
    Mat(const Field& F, int rows, int cols)
        : F_(&F), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), F.zero()) {}

    const Field& field() const { return *F_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    Elem& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Elem& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    Mat operator*(const Mat& rhs) const;
    bool operator==(const Mat& rhs) const;
    Mat transpose() const;
    // Entrywise x -> x^(p^k).
    Mat frob_power(int k) const;

    std::vector<Elem> col(int c) const;
    std::vector<Elem> row(int r) const;

  private:
    const Field* F_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref_inplace(Mat& M);
int rank(const Mat& M);

// A subspace of F_q^n held as reduced-row-echelon basis rows.
class Subspace {
  public:
    Subspace(const Field& F, int ambient) : F_(&F), ambient_(ambient), rows_(F, 0, ambient) {}

    static Subspace row_space(const Mat& M);
    static Subspace column_space(const Mat& M);

    int ambient() const noexcept { return ambient_; }
    int dim() const noexcept { return rows_.rows(); }
    const Mat& basis_rows() const noexcept { return rows_; }
    const std::vector<int>& pivots() const noexcept { return pivots_; }

    bool contains(const std::vector<Elem>& v) const;
    bool contains(const Subspace& other) const;

  private:
    const Field* F_;
    int ambient_;
    Mat rows_;
    std::vector<int> pivots_;
};

}  // namespace etale

#endif

#include "etale/linalg.hpp"

#include "etale/errors.hpp"

namespace etale {

bool Mat::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_) throw Error(errc::invalid_argument, "matrix shape mismatch");
    Mat r(*F_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Elem& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j) r.at(i, j) += aik * rhs.at(k, j);
        }
    return r;
}

bool Mat::operator==(const Mat& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

Mat Mat::transpose() const {
    Mat r(*F_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::frob_power(int k) const {
    Mat r = *this;
    for (auto& e : r.a_) e = e.frob_power(k);
    return r;
}

std::vector<Elem> Mat::col(int c) const {
    std::vector<Elem> v;
    v.reserve(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v.push_back(at(i, c));
    return v;
}

std::vector<Elem> Mat::row(int r) const {
    std::vector<Elem> v;
    v.reserve(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) v.push_back(at(r, j));
    return v;
}

std::vector<int> rref_inplace(Mat& M) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < M.rows(); ++i)
            if (!M.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < M.cols(); ++j) std::swap(M.at(pivot, j), M.at(r, j));
        Elem inv = M.at(r, c).inverse();
        for (int j = c; j < M.cols(); ++j) M.at(r, j) = M.at(r, j) * inv;
        for (int i = 0; i < M.rows(); ++i) {
            if (i == r || M.at(i, c).is_zero()) continue;
            Elem factor = M.at(i, c);
            for (int j = c; j < M.cols(); ++j) M.at(i, j) -= factor * M.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const Mat& M) {
    Mat tmp = M;
    return static_cast<int>(rref_inplace(tmp).size());
}

Subspace Subspace::row_space(const Mat& M) {
    Mat tmp = M;
    auto pivots = rref_inplace(tmp);
    Subspace S(M.field(), M.cols());
    S.pivots_ = pivots;
    Mat basis(M.field(), static_cast<int>(pivots.size()), M.cols());
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
        for (int j = 0; j < M.cols(); ++j) basis.at(i, j) = tmp.at(i, j);
    S.rows_ = basis;
    return S;
}

Subspace Subspace::column_space(const Mat& M) { return row_space(M.transpose()); }

bool Subspace::contains(const std::vector<Elem>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw Error(errc::invalid_argument, "vector length mismatch");
    std::vector<Elem> w = v;
    for (int i = 0; i < rows_.rows(); ++i) {
        int pc = pivots_[static_cast<size_t>(i)];
        if (w[static_cast<size_t>(pc)].is_zero()) continue;
        Elem factor = w[static_cast<size_t>(pc)];
        for (int j = 0; j < ambient_; ++j) w[static_cast<size_t>(j)] -= factor * rows_.at(i, j);
    }
    for (const auto& e : w)
        if (!e.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.rows_.row(i))) return false;
    return true;
}

}  // namespace etale

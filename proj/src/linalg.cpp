#include "brauer/linalg.hpp"

#include <stdexcept>

namespace brauer {

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("Mat::mul shape mismatch");
    Mat out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Scalar& v = at(i, k);
            if (v.isZero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                const Scalar& w = o.at(k, j);
                if (!w.isZero()) out.at(i, j) += v * w;
            }
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat::add shape mismatch");
    Mat out(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + o.a_[k];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat::sub shape mismatch");
    Mat out(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - o.a_[k];
    return out;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat out(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * s;
    return out;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!m.at(r, col).isZero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(piv, c));
        Scalar inv = Scalar(1) / m.at(row, col);
        for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).isZero()) continue;
            Scalar f = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Scalar>> nullspace(Mat m) {
    const int n = m.cols();
    std::vector<int> pivots = rref(m);
    std::vector<bool> isPivot(static_cast<size_t>(n), false);
    for (int p : pivots) isPivot[static_cast<size_t>(p)] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < n; ++free) {
        if (isPivot[static_cast<size_t>(free)]) continue;
        std::vector<Scalar> v(static_cast<size_t>(n));
        v[static_cast<size_t>(free)] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat inverse(Mat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    const int n = m.rows();
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    std::vector<int> piv = rref(aug);
    if (static_cast<int>(piv.size()) != n || piv.back() != n - 1)
        throw std::domain_error("inverse: singular matrix");
    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

bool SparseRank::add(std::map<long, Scalar> row) {
    while (!row.empty()) {
        long lead = row.begin()->first;
        auto it = rows_.find(lead);
        if (it == rows_.end()) {
            Scalar inv = Scalar(1) / row.begin()->second;
            for (auto& [k, v] : row) v *= inv;
            rows_.emplace(lead, std::move(row));
            return true;
        }
        Scalar f = row.begin()->second;
        for (const auto& [k, v] : it->second) {
            auto jt = row.find(k);
            if (jt == row.end()) {
                Scalar nv = -f * v;
                if (!nv.isZero()) row.emplace(k, std::move(nv));
            } else {
                jt->second -= f * v;
                if (jt->second.isZero()) row.erase(jt);
            }
        }
    }
    return false;
}

} // namespace brauer

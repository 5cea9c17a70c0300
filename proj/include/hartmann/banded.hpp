#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

// Small banded-matrix arithmetic for the discretized SUSY-algebra checks.
// Stored by diagonals: entry(i, j) lives in diagonal j - i.  Products of
// bandwidth-p and bandwidth-q matrices have bandwidth p + q, so everything
// the block operators Q, Q\dagger, H_ss need stays O(n).

namespace hartmann {

class BandedMatrix {
  public:
    BandedMatrix(int n, int bandwidth)
        : n_(n), bw_(bandwidth),
          diags_(2 * bandwidth + 1, std::vector<double>(n, 0.0)) {
        if (n < 1 || bandwidth < 0) {
            throw std::invalid_argument("BandedMatrix: bad dimensions");
        }
    }

    int size() const { return n_; }
    int bandwidth() const { return bw_; }

    double get(int i, int j) const {
        const int k = j - i;
        if (std::abs(k) > bw_) return 0.0;
        return diags_[static_cast<std::size_t>(k + bw_)][static_cast<std::size_t>(i)];
    }

    void set(int i, int j, double value) {
        const int k = j - i;
        if (std::abs(k) > bw_) {
            throw std::out_of_range("BandedMatrix::set outside the band");
        }
        diags_[static_cast<std::size_t>(k + bw_)][static_cast<std::size_t>(i)] = value;
    }

    BandedMatrix transpose() const {
        BandedMatrix t(n_, bw_);
        for (int i = 0; i < n_; ++i) {
            const int j_lo = std::max(0, i - bw_);
            const int j_hi = std::min(n_ - 1, i + bw_);
            for (int j = j_lo; j <= j_hi; ++j) t.set(j, i, get(i, j));
        }
        return t;
    }

    BandedMatrix times(const BandedMatrix& other) const {
        if (other.n_ != n_) {
            throw std::invalid_argument("BandedMatrix::times: size mismatch");
        }
        BandedMatrix c(n_, bw_ + other.bw_);
        for (int i = 0; i < n_; ++i) {
            const int k_lo = std::max(0, i - bw_);
            const int k_hi = std::min(n_ - 1, i + bw_);
            for (int k = k_lo; k <= k_hi; ++k) {
                const double a_ik = get(i, k);
                if (a_ik == 0.0) continue;
                const int j_lo = std::max(0, k - other.bw_);
                const int j_hi = std::min(n_ - 1, k + other.bw_);
                for (int j = j_lo; j <= j_hi; ++j) {
                    c.set(i, j, c.get(i, j) + a_ik * other.get(k, j));
                }
            }
        }
        return c;
    }

    BandedMatrix& add_scaled(const BandedMatrix& other, double factor) {
        if (other.n_ != n_ || other.bw_ > bw_) {
            throw std::invalid_argument("BandedMatrix::add_scaled: shape mismatch");
        }
        for (int i = 0; i < n_; ++i) {
            const int j_lo = std::max(0, i - other.bw_);
            const int j_hi = std::min(n_ - 1, i + other.bw_);
            for (int j = j_lo; j <= j_hi; ++j) {
                set(i, j, get(i, j) + factor * other.get(i, j));
            }
        }
        return *this;
    }

    std::vector<double> apply(const std::vector<double>& x) const {
        if (static_cast<int>(x.size()) != n_) {
            throw std::invalid_argument("BandedMatrix::apply: size mismatch");
        }
        std::vector<double> y(x.size(), 0.0);
        for (int i = 0; i < n_; ++i) {
            const int j_lo = std::max(0, i - bw_);
            const int j_hi = std::min(n_ - 1, i + bw_);
            double acc = 0.0;
            for (int j = j_lo; j <= j_hi; ++j) acc += get(i, j) * x[j];
            y[static_cast<std::size_t>(i)] = acc;
        }
        return y;
    }

    double frobenius_norm() const {
        double acc = 0.0;
        for (int i = 0; i < n_; ++i) {
            const int j_lo = std::max(0, i - bw_);
            const int j_hi = std::min(n_ - 1, i + bw_);
            for (int j = j_lo; j <= j_hi; ++j) {
                const double v = get(i, j);
                acc += v * v;
            }
        }
        return std::sqrt(acc);
    }

  private:
    int n_;
    int bw_;
    std::vector<std::vector<double>> diags_;
};

}  // namespace hartmann

#include "steklov/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "steklov/errors.hpp"

namespace steklov {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DomainError("CMatrix: shape mismatch in product");
  CMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex aik = (*this)(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
    }
  return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DomainError("CMatrix: shape mismatch in sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& v : data_) v *= s;
  return *this;
}

Complex CMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

double hermitian_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("hermitian_defect: matrix not square");
  double d = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

namespace linalg {

SymmetricEigen jacobi_symmetric(std::vector<double> a, std::size_t n, double tol, int max_sweeps) {
  if (a.size() != n * n) throw DomainError("jacobi_symmetric: storage size mismatch");
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  double frob = 0.0;
  for (double x : a) frob += x * x;
  frob = std::sqrt(frob);

  SymmetricEigen out;
  int sweep = 0;
  for (;; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * at(p, q) * at(p, q);
    off = std::sqrt(off);
    if (off <= tol * frob || frob == 0.0) break;
    if (sweep >= max_sweeps) throw ContractViolation("jacobi_symmetric: no convergence within the sweep limit");

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return at(i, i) < at(j, j); });
  out.sweeps = sweep;
  for (std::size_t idx : order) {
    out.values.push_back(at(idx, idx));
    std::vector<double> col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v[k * n + idx];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

namespace {

double vec_norm(const std::vector<Complex>& x) {
  double s = 0.0;
  for (const auto& c : x) s += std::norm(c);
  return std::sqrt(s);
}

Complex vec_dot(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace

HermitianEigen hermitian_eigen(const CMatrix& m, double cluster_rel_gap) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("hermitian_eigen: matrix not square");
  HermitianEigen out;
  out.vectors = CMatrix(n, n);
  if (n == 0) return out;

  const std::size_t n2 = 2 * n;
  std::vector<double> s(n2 * n2, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // Symmetrize the embedding; a Hermitian defect is the caller's contract.
      const Complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
      s[i * n2 + j] = h.real();
      s[(i + n) * n2 + (j + n)] = h.real();
      s[i * n2 + (j + n)] = -h.imag();
      s[(i + n) * n2 + j] = h.imag();
    }
  const SymmetricEigen sym = jacobi_symmetric(std::move(s), n2);

  double scale = 0.0;
  for (double v : sym.values) scale = std::max(scale, std::abs(v));
  const double gap = cluster_rel_gap * scale;

  std::size_t start = 0;
  std::size_t out_col = 0;
  while (start < n2) {
    std::size_t end = start + 1;
    while (end < n2 && sym.values[end] - sym.values[end - 1] <= gap) ++end;
    const std::size_t size = end - start;
    if (size % 2 != 0) throw ContractViolation("hermitian_eigen: unpaired eigenvalue in the real embedding");

    std::vector<std::vector<Complex>> cand;
    for (std::size_t r = start; r < end; ++r) {
      std::vector<Complex> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = Complex(sym.vectors[r][i], sym.vectors[r][i + n]);
      cand.push_back(std::move(c));
    }
    std::vector<std::pair<double, std::vector<Complex>>> picked;
    for (std::size_t take = 0; take < size / 2; ++take) {
      std::size_t best = 0;
      double best_norm = -1.0;
      for (std::size_t r = 0; r < cand.size(); ++r) {
        const double nr = vec_norm(cand[r]);
        if (nr > best_norm) {
          best_norm = nr;
          best = r;
        }
      }
      if (best_norm < 0.5) throw ContractViolation("hermitian_eigen: degenerate eigenvector extraction failed");
      std::vector<Complex> q = cand[best];
      for (auto& x : q) x /= best_norm;
      // Re-orthogonalize against vectors already accepted in this cluster.
      for (const auto& [val, prev] : picked) {
        const Complex proj = vec_dot(prev, q);
        for (std::size_t i = 0; i < n; ++i) q[i] -= proj * prev[i];
      }
      const double qn = vec_norm(q);
      for (auto& x : q) x /= qn;
      for (auto& c : cand) {
        const Complex proj = vec_dot(q, c);
        for (std::size_t i = 0; i < n; ++i) c[i] -= proj * q[i];
      }
      // Rayleigh quotient
      double rq = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        Complex mi = 0.0;
        for (std::size_t j = 0; j < n; ++j) mi += m(i, j) * q[j];
        rq += (std::conj(q[i]) * mi).real();
      }
      picked.emplace_back(rq, std::move(q));
    }
    std::stable_sort(picked.begin(), picked.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [val, vec] : picked) {
      out.values.push_back(val);
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, out_col) = vec[i];
      ++out_col;
    }
    start = end;
  }
  return out;
}

CMatrix lu_solve(const CMatrix& b, const CMatrix& a, double pivot_tol) {
  const std::size_t n = b.rows();
  if (b.cols() != n || a.rows() != n) throw DomainError("lu_solve: shape mismatch");
  CMatrix lu = b;
  CMatrix x = a;
  const double scale = b.max_abs();
  if (scale == 0.0) throw ConditioningError("lu_solve: zero matrix");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > best) {
        best = std::abs(lu(i, k));
        piv = i;
      }
    if (best < pivot_tol * scale) throw ConditioningError("lu_solve: matrix is numerically singular");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(k, j), x(piv, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) / lu(k, k);
      if (f == Complex(0.0)) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= f * x(k, j);
      lu(i, k) = 0.0;
    }
  }
  for (std::size_t kk = n; kk-- > 0;) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      Complex acc = x(kk, j);
      for (std::size_t i = kk + 1; i < n; ++i) acc -= lu(kk, i) * x(i, j);
      x(kk, j) = acc / lu(kk, kk);
    }
  }
  return x;
}

namespace {

void to_hessenberg(CMatrix& h) {
  const std::size_t n = h.rows();
  if (n < 3) return;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::vector<Complex> v(n - k - 1);
    double xnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i - k - 1] = h(i, k);
      xnorm += std::norm(h(i, k));
    }
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    const Complex x0 = v[0];
    const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0) : x0 / std::abs(x0);
    v[0] += phase * xnorm;
    double vnorm = 0.0;
    for (const auto& c : v) vnorm += std::norm(c);
    vnorm = std::sqrt(vnorm);
    if (vnorm == 0.0) continue;
    for (auto& c : v) c /= vnorm;

    // H <- (I - 2 v v^H) H
    for (std::size_t j = k; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i - k - 1]) * h(i, j);
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= 2.0 * v[i - k - 1] * s;
    }
    // H <- H (I - 2 v v^H)
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j - k - 1];
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= 2.0 * s * std::conj(v[j - k - 1]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

struct Givens {
  double c;
  Complex s;
};

Givens make_givens(Complex a, Complex b) {
  const double na = std::abs(a);
  const double nb = std::abs(b);
  if (nb == 0.0) return {1.0, 0.0};
  if (na == 0.0) return {0.0, 1.0};
  const double nu = std::hypot(na, nb);
  return {na / nu, (a / na) * std::conj(b) / nu};
}

}  // namespace

std::vector<Complex> general_eigenvalues(CMatrix h) {
  const std::size_t n = h.rows();
  if (h.cols() != n) throw DomainError("general_eigenvalues: matrix not square");
  std::vector<Complex> eig(n);
  if (n == 0) return eig;
  to_hessenberg(h);

  const double eps = std::numeric_limits<double>::epsilon();
  std::size_t hi = n - 1;
  int iter = 0;
  int total = 0;
  const int max_total = 60 * static_cast<int>(n) + 100;
  std::vector<Givens> rot(n);

  while (true) {
    if (hi == 0) {
      eig[0] = h(0, 0);
      break;
    }
    std::size_t lo = hi;
    while (lo > 0) {
      const double sub = std::abs(h(lo, lo - 1));
      const double diag = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (sub <= eps * (diag == 0.0 ? 1.0 : diag)) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = h(hi, hi);
      --hi;
      iter = 0;
      continue;
    }
    if (++total > max_total) throw ContractViolation("general_eigenvalues: QR iteration did not converge");
    ++iter;

    Complex sigma;
    if (iter % 11 == 0) {
      sigma = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
    } else {
      const Complex a = h(hi - 1, hi - 1);
      const Complex b = h(hi - 1, hi);
      const Complex c = h(hi, hi - 1);
      const Complex d = h(hi, hi);
      const Complex half_tr = 0.5 * (a + d);
      const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
      const Complex l1 = half_tr + disc;
      const Complex l2 = half_tr - disc;
      sigma = std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
    }

    for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= sigma;
    for (std::size_t i = lo; i < hi; ++i) {
      const Givens g = make_givens(h(i, i), h(i + 1, i));
      rot[i] = g;
      for (std::size_t j = i; j <= hi; ++j) {
        const Complex h1 = h(i, j);
        const Complex h2 = h(i + 1, j);
        h(i, j) = g.c * h1 + g.s * h2;
        h(i + 1, j) = -std::conj(g.s) * h1 + g.c * h2;
      }
    }
    for (std::size_t i = lo; i < hi; ++i) {
      const Givens g = rot[i];
      const std::size_t rmax = std::min(i + 1, hi);
      for (std::size_t r = lo; r <= rmax; ++r) {
        const Complex h1 = h(r, i);
        const Complex h2 = h(r, i + 1);
        h(r, i) = h1 * g.c + h2 * std::conj(g.s);
        h(r, i + 1) = -h1 * g.s + h2 * g.c;
      }
    }
    for (std::size_t i = lo; i <= hi; ++i) h(i, i) += sigma;
  }
  return eig;
}

}  // namespace linalg
}  // namespace steklov

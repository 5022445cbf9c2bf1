#pragma once

// Exact scalar types and dense Eigen aliases used across the library.
// All group, metric and series computations are exact: integers are
// arbitrary precision, rationals are quotients of those.

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/functional/hash.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace geogrow {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

// Error domains reported by the library.  The CLI maps these onto exit
// codes: config -> 2, resource -> 3, validation -> 4.
enum class ErrorKind { config, resource, validation, internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) throw Error(kind, msg);
}

inline std::size_t hash_int(const Int& v) {
  return boost::hash<Int>{}(v);
}

inline void hash_mix(std::size_t& seed, std::size_t v) {
  boost::hash_combine(seed, v);
}

inline std::size_t hash_vec(const VecZ& v) {
  std::size_t seed = static_cast<std::size_t>(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) hash_mix(seed, hash_int(v[i]));
  return seed;
}

inline std::size_t hash_mat(const MatZ& m) {
  std::size_t seed = static_cast<std::size_t>(m.rows());
  hash_mix(seed, static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      hash_mix(seed, hash_int(m(i, j)));
  return seed;
}

// Matrix products written out by hand: assigning an Eigen Product
// expression of multiprecision scalars trips a non-SFINAE-safe byte
// container probe inside the scalar's constructor set, so products are
// evaluated eagerly here.  Sums, negation and row operations are fine.
inline VecZ mul(const MatZ& a, const VecZ& x) {
  VecZ r = VecZ::Zero(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r[i] += a(i, j) * x[j];
  return r;
}

inline MatZ mul(const MatZ& a, const MatZ& b) {
  MatZ r = MatZ::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

// Lexicographic comparison; returns <0, 0 or >0.
inline int compare_vec(const VecZ& a, const VecZ& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

inline int compare_mat(const MatZ& a, const MatZ& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
  if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j) ? -1 : 1;
  return 0;
}

}  // namespace geogrow

#ifndef NCSYMP_ERRORS_HPP
#define NCSYMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncsymp {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct not_a_unit : error {
  explicit not_a_unit(const std::string& what = "element is not a unit") : error(what) {}
};

struct dimension_mismatch : error {
  explicit dimension_mismatch(const std::string& what = "dimension mismatch") : error(what) {}
};

struct not_symplectic : error {
  explicit not_symplectic(const std::string& what = "matrix is not symplectic") : error(what) {}
};

struct not_commutative : error {
  explicit not_commutative(const std::string& what = "ring is not commutative with trivial involution")
      : error(what) {}
};

struct not_unit_determinant : error {
  explicit not_unit_determinant(const std::string& what = "determinant is not 1") : error(what) {}
};

struct wrong_base_ring : error {
  explicit wrong_base_ring(const std::string& what = "operation undefined over this base ring") : error(what) {}
};

struct bad_descriptor : error {
  explicit bad_descriptor(const std::string& what = "malformed ring descriptor") : error(what) {}
};

struct bad_element : error {
  explicit bad_element(const std::string& what = "malformed element encoding") : error(what) {}
};

struct bad_seed : error {
  explicit bad_seed(const std::string& what = "invalid seed") : error(what) {}
};

struct depth_limit : error {
  explicit depth_limit(const std::string& what = "depth over cap") : error(what) {}
};

struct boundary_edge : error {
  explicit boundary_edge(const std::string& what = "edge is not flippable") : error(what) {}
};

struct missing_edge : error {
  explicit missing_edge(const std::string& what = "no such edge") : error(what) {}
};

struct triangle_condition_violated : error {
  explicit triangle_condition_violated(const std::string& what = "triangle condition violated") : error(what) {}
};

}  // namespace ncsymp

#endif  // NCSYMP_ERRORS_HPP

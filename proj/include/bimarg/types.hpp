#ifndef BIMARG_TYPES_HPP
#define BIMARG_TYPES_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

// Bit conventions used throughout the library:
//   - vertices are integers 0..n-1, in the order given by the dataset header
//   - a VertexSet is a bitmask, bit v set <=> vertex v is in the set
//   - a Cell indexes a table entry, bit v set <=> X_v = 1
// Tables over {0,1}^V are vectors of length 2^n indexed by Cell.

namespace bimarg {

using VertexSet = std::uint32_t;
using Cell = std::uint32_t;

// Hard cap guarding 2^n table sizes.
inline constexpr int kMaxVertices = 20;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

inline constexpr VertexSet full_set(int num_vars) {
  return (VertexSet{1} << num_vars) - 1;
}

inline int set_size(VertexSet a) { return std::popcount(a); }

// Lowest vertex index in a nonempty set.
inline int min_vertex(VertexSet a) { return std::countr_zero(a); }

inline std::size_t table_size(int num_vars) { return std::size_t{1} << num_vars; }

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  // Stable machine-readable identifier, used by the CLI.
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class OutsideSimplexError : public Error {
 public:
  OutsideSimplexError(Cell cell, double value)
      : Error("outside-simplex",
              "cell " + std::to_string(cell) + " has probability " +
                  std::to_string(value) + " below tolerance"),
        cell_(cell),
        value_(value) {}
  Cell cell() const { return cell_; }
  double value() const { return value_; }

 private:
  Cell cell_;
  double value_;
};

class ZeroMarginalError : public Error {
 public:
  explicit ZeroMarginalError(int vertex)
      : Error("zero-marginal",
              "q is zero for singleton vertex " + std::to_string(vertex)),
        vertex_(vertex) {}
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

class LogOfZeroError : public Error {
 public:
  explicit LogOfZeroError(Cell cell)
      : Error("log-of-zero", "zero probability at cell " + std::to_string(cell) +
                                 " with positive count"),
        cell_(cell) {}
  Cell cell() const { return cell_; }

 private:
  Cell cell_;
};

class SingularInformationError : public Error {
 public:
  SingularInformationError()
      : Error("singular-information", "information matrix is not invertible") {}
};

class NegativeDevianceError : public Error {
 public:
  explicit NegativeDevianceError(double deviance)
      : Error("negative-deviance",
              "deviance " + std::to_string(deviance) +
                  " is negative beyond tolerance; fit has not converged") {}
};

class DegenerateMarginError : public Error {
 public:
  DegenerateMarginError(int v, int w)
      : Error("degenerate-margin", "2x2 margin of vertices " + std::to_string(v) +
                                       "," + std::to_string(w) +
                                       " has a zero cell") {}
};

class ZeroConditioningEventError : public Error {
 public:
  explicit ZeroConditioningEventError(VertexSet set)
      : Error("zero-conditioning-event",
              "conditioning event X_S=0 has zero probability for set mask " +
                  std::to_string(set)),
        set_(set) {}
  VertexSet set() const { return set_; }

 private:
  VertexSet set_;
};

class InnerNoConvergenceError : public Error {
 public:
  explicit InnerNoConvergenceError(int vertex)
      : Error("inner-no-convergence",
              "inner solver did not converge at vertex " + std::to_string(vertex)),
        vertex_(vertex) {}
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

class ZeroCountsRejectedError : public Error {
 public:
  ZeroCountsRejectedError()
      : Error("zero-counts-rejected",
              "count table has empty cells; supply a pseudo-count to proceed") {}
};

class GraphNotInvariantError : public Error {
 public:
  GraphNotInvariantError()
      : Error("graph-not-invariant",
              "permutation group does not leave the graph invariant") {}
};

class SymmetryViolatedError : public Error {
 public:
  explicit SymmetryViolatedError(double violation)
      : Error("symmetry-violated-at-optimum",
              "fit on group-averaged counts returned a non-symmetric optimum "
              "(max cell gap " +
                  std::to_string(violation) + ")"),
        violation_(violation) {}
  double violation() const { return violation_; }

 private:
  double violation_;
};

class ParseError : public Error {
 public:
  ParseError(std::string code, const std::string& message)
      : Error(std::move(code), message) {}
};

inline void check_vertex_range(int v, int num_vars) {
  if (v < 0 || v >= num_vars)
    throw Error("vertex-out-of-range",
                "vertex index " + std::to_string(v) + " outside 0.." +
                    std::to_string(num_vars - 1));
}

inline void check_set_range(VertexSet a, int num_vars) {
  if (a & ~full_set(num_vars))
    throw Error("vertex-out-of-range",
                "set mask " + std::to_string(a) + " contains vertices >= " +
                    std::to_string(num_vars));
}

}  // namespace bimarg

#endif  // BIMARG_TYPES_HPP

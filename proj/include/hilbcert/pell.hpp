#pragma once

#include "hilbcert/errors.hpp"
#include "hilbcert/integer.hpp"

#include <utility>
#include <vector>

namespace hilbcert {

/// A solution of x^2 - d*y^2 = n with d >= 2 not a square. The equation is
/// checked on construction.
class PellSolution {
  public:
    PellSolution(Integer x, Integer y, Integer d, Integer n);

    const Integer &x() const { return x_; }
    const Integer &y() const { return y_; }
    const Integer &d() const { return d_; }
    const Integer &n() const { return n_; }

    friend bool operator==(const PellSolution &, const PellSolution &) = default;

  private:
    Integer x_, y_, d_, n_;
};

/// Least positive solution of x^2 - d*y^2 = 1, read off the convergents of
/// the continued fraction of sqrt(d).
PellSolution fundamental_solution(const Integer &d);

/// The first `count` positive solutions of x^2 - 2y^2 = 1, starting at (3, 2).
std::vector<PellSolution> d2_solution_stream(std::size_t count);

/// (x, y) -> (2y, x), from x^2 - 2y^2 = 1 to x^2 - 2y^2 = -2.
PellSolution p1_to_pm2(const PellSolution &s);
/// (x, y) -> (y, x/2), the inverse map.
PellSolution pm2_to_p1(const PellSolution &s);

/// The column (a, c) completing [[d, a], [f, c]] to a matrix of determinant
/// `target_det` with a^2 - 2c^2 = -2.
struct PellMatrixClass {
    Integer a, c;
    /// Number of lattice points on d*c - a*f = target_det inside the search
    /// box that were tested against a^2 - 2c^2 = -2.
    Integer points_checked;
    Integer box;
};

/// Solves c^2 - 2*t*d*c + (1 + 2f^2) = 0 (t = target_det) and confirms the
/// answer is the only solution with |a|, |c| <= 2(|d| + |f|) + 2 by walking
/// every integer point of the line d*c - a*f = t inside that box.
/// Throws ParameterError unless d^2 - 2f^2 = 1 and target_det = +-1.
PellMatrixClass classify_pell_matrix(const Integer &d, const Integer &f, int target_det);

/// All (x, y) with |x|, |y| <= bound and x^2 - d*y^2 = n, sorted.
std::vector<PellSolution> bounded_pell_search(const Integer &d, const Integer &n, const Integer &bound);

/// All (u, v) with |u|, |v| <= bound and p*u^2 - q*v^2 = n (p, q >= 1, any
/// squareness), sorted.
std::vector<std::pair<Integer, Integer>> bounded_form_search(const Integer &p, const Integer &q, const Integer &n,
                                                             const Integer &bound);

} // namespace hilbcert

#include <kwb/matrix_q.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace kwb {

namespace {

// Scale each row by the lcm of its denominators.  Returns the integer grid;
// multipliers[i] is the factor row i was multiplied by (always positive).
std::vector<std::vector<Integer>> clear_denominators(const MatrixQ& m,
                                                     std::vector<Integer>& multipliers) {
    std::vector<std::vector<Integer>> g(m.rows(), std::vector<Integer>(m.cols()));
    multipliers.assign(m.rows(), Integer(1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Integer& den = m.at(i, j).denominator();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        multipliers[i] = lcm;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            Integer scale;
            mpz_divexact(scale.get_mpz_t(), lcm.get_mpz_t(), q.denominator().get_mpz_t());
            g[i][j] = q.numerator() * scale;
        }
    }
    return g;
}

// One-step fraction-free elimination.  Pivot rows are chosen as the first
// row with a nonzero entry in the current column; columns with no pivot are
// skipped.  Returns the rank; fills `sign` with the row-swap sign and
// `last_pivot` with the final pivot value (meaningful when rank = rows).
std::size_t bareiss(std::vector<std::vector<Integer>>& g, int& sign, Integer& last_pivot) {
    sign = 1;
    last_pivot = 1;
    const std::size_t rows = g.size();
    const std::size_t cols = rows ? g[0].size() : 0;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && g[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r) {
            std::swap(g[pr], g[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer num = g[i][j] * g[r][c] - g[i][c] * g[r][j];
                mpz_divexact(g[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            g[i][c] = 0;
        }
        prev = g[r][c];
        ++r;
    }
    last_pivot = prev;
    return r;
}

}  // namespace

std::size_t matrix_rank(const MatrixQ& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    std::vector<Integer> multipliers;
    auto g = clear_denominators(m, multipliers);
    int sign;
    Integer last;
    return bareiss(g, sign, last);
}

Rational matrix_det(const MatrixQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix_det: matrix not square");
    if (m.rows() == 0) return Rational(1);
    std::vector<Integer> multipliers;
    auto g = clear_denominators(m, multipliers);
    int sign;
    Integer last;
    std::size_t rank = bareiss(g, sign, last);
    if (rank < m.rows()) return Rational(0);
    Integer scale = 1;
    for (const Integer& f : multipliers) scale *= f;
    Rational det(last, scale);
    return sign < 0 ? det * Rational(-1) : det;
}

}  // namespace kwb

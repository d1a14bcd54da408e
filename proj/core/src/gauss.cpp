#include "braidrot/gauss.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace braidrot {

bool linked(const GaussArrow& x, const GaussArrow& y) {
  const int a = std::min(x.under_pos, x.over_pos);
  const int b = std::max(x.under_pos, x.over_pos);
  const bool u_inside = a < y.under_pos && y.under_pos < b;
  const bool o_inside = a < y.over_pos && y.over_pos < b;
  return u_inside != o_inside;
}

const GaussArrow& GaussDiagram::at_column(int column) const {
  if (column < 0 || column >= static_cast<int>(arrows.size()))
    throw std::out_of_range("gauss: no crossing at that column");
  return arrows[column];
}

GaussDiagram gauss_diagram(const MarkedDiagram& d) {
  if (!is_knot(d.word))
    throw std::invalid_argument("gauss_diagram: closure is not a knot");
  const int n = d.word.n;
  const int c = d.length();
  const auto& w = d.word.letters;
  const Permutation rho = closure_permutation(d.word);

  GaussDiagram g;
  g.n = n;
  g.points = 2 * c;
  g.arrows.resize(c);
  for (int p = 0; p < c; ++p) {
    g.arrows[p].id = d.ids[p];
    g.arrows[p].column = p;
    g.arrows[p].writhe = w[p] > 0 ? 1 : -1;
  }

  // Walk the passes in closure order, dropping circle positions on the two
  // points of every crossing met on the way and remembering which pass each
  // point belongs to.
  std::vector<int> under_pass(c, -1), over_pass(c, -1);
  int position = 0;
  int row = 1;
  for (int k = 0; k < n; ++k) {
    int at = row;
    for (int p = 0; p < c; ++p) {
      const int i = std::abs(w[p]);
      if (at != i && at != i + 1) continue;
      const bool over = (w[p] > 0) == (at == i);
      if (over) {
        g.arrows[p].over_pos = position++;
        over_pass[p] = k;
      } else {
        g.arrows[p].under_pos = position++;
        under_pass[p] = k;
      }
      at = (at == i) ? i + 1 : i;
    }
    row = rho.apply(row);
  }

  for (int p = 0; p < c; ++p) {
    int m = (over_pass[p] - under_pass[p]) % n;
    if (m < 0) m += n;
    g.arrows[p].marking = m;
  }
  return g;
}

}  // namespace braidrot

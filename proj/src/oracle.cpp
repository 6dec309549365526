#include "flagvar/oracle.hpp"

#include <deque>

namespace flagvar::oracle {

namespace {

Vec reflect(const Mat& cartan, const Vec& v, int i) {
  int p = 0;
  for (std::size_t j = 0; j < v.size(); ++j) p += cartan[i][j] * v[j];
  Vec out = v;
  out[i] -= p;
  return out;
}

}  // namespace

std::set<Vec> root_orbit(const Mat& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::set<Vec> seen;
  std::deque<Vec> queue;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Vec v = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Vec r = reflect(cartan, v, i);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  return seen;
}

Mat reflection_matrix(const Mat& cartan, int i) {
  const int n = static_cast<int>(cartan.size());
  Mat m(n, Vec(n, 0));
  for (int j = 0; j < n; ++j) {
    Vec e(n, 0);
    e[j] = 1;
    Vec col = reflect(cartan, e, i);
    for (int r = 0; r < n; ++r) m[r][j] = col[r];
  }
  return m;
}

Mat multiply(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

std::map<Mat, int> weyl_bfs(const Mat& cartan, std::size_t cap) {
  const int n = static_cast<int>(cartan.size());
  std::vector<Mat> generators;
  for (int i = 0; i < n; ++i) generators.push_back(reflection_matrix(cartan, i));
  Mat identity(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) identity[i][i] = 1;

  std::map<Mat, int> distance{{identity, 0}};
  std::deque<Mat> queue{identity};
  while (!queue.empty()) {
    Mat w = queue.front();
    queue.pop_front();
    const int d = distance[w];
    for (const Mat& s : generators) {
      Mat next = multiply(w, s);
      if (distance.emplace(next, d + 1).second) {
        if (distance.size() > cap) return {};
        queue.push_back(std::move(next));
      }
    }
  }
  return distance;
}

std::vector<std::size_t> poincare_polynomial(const std::map<Mat, int>& table) {
  std::vector<std::size_t> coeffs;
  for (const auto& [w, d] : table) {
    if (static_cast<std::size_t>(d) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(d) + 1, 0);
    ++coeffs[static_cast<std::size_t>(d)];
  }
  return coeffs;
}

bool columns_positive(const Mat& w, const std::vector<bool>& in_levi) {
  for (std::size_t j = 0; j < in_levi.size(); ++j) {
    if (!in_levi[j]) continue;
    int sum = 0;
    for (const auto& row : w) sum += row[j];
    if (sum <= 0) return false;
  }
  return true;
}

}  // namespace flagvar::oracle

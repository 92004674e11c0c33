#include "salg/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace salg {

namespace {

constexpr std::size_t kMaxGroupOrder = 5040;

}  // namespace

Perm::Perm(std::size_t n) : images_(n) { std::iota(images_.begin(), images_.end(), 1); }

Perm Perm::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > images.size() || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation image sequence");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::transposition(std::size_t n, int i, int j) { return cycle(n, {i, j}); }

Perm Perm::cycle(std::size_t n, std::initializer_list<int> points) {
  return cycle(n, std::vector<int>(points));
}

Perm Perm::cycle(std::size_t n, const std::vector<int>& points) {
  Perm p(n);
  std::set<int> distinct;
  for (int v : points) {
    if (v < 1 || static_cast<std::size_t>(v) > n || !distinct.insert(v).second)
      throw std::invalid_argument("bad cycle for degree " + std::to_string(n));
  }
  for (std::size_t k = 0; k < points.size(); ++k)
    p.images_[static_cast<std::size_t>(points[k] - 1)] = points[(k + 1) % points.size()];
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k + 1))
      return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm p(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k)
    p.images_[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k + 1);
  return p;
}

Perm operator*(const Perm& lhs, const Perm& rhs) {
  if (lhs.degree() != rhs.degree())
    throw std::invalid_argument("composing permutations of different degree");
  Perm p(lhs.degree());
  for (std::size_t k = 0; k < rhs.images_.size(); ++k)
    p.images_[k] = lhs(rhs.images_[k]);
  return p;
}

std::string Perm::to_string() const {
  std::string s;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == static_cast<int>(start + 1))
      continue;
    s += "(";
    std::size_t k = start;
    bool first = true;
    while (!done[k]) {
      done[k] = true;
      if (!first)
        s += " ";
      s += std::to_string(k + 1);
      first = false;
      k = static_cast<std::size_t>(images_[k] - 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Perm Perm::parse(std::size_t n, const std::string& text) {
  Perm result(n);
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(')
      throw std::invalid_argument("bad permutation '" + text + "'");
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos)
      throw std::invalid_argument("unbalanced permutation '" + text + "'");
    std::istringstream in(text.substr(pos + 1, close - pos - 1));
    std::vector<int> points;
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size())
        throw std::invalid_argument("bad point '" + token + "'");
      points.push_back(v);
    }
    if (!points.empty())
      result = result * cycle(n, points);
    any = true;
    pos = close + 1;
  }
  if (!any)
    throw std::invalid_argument("empty permutation text");
  return result;
}

std::vector<Perm> enumerate_group(std::size_t n, const std::vector<Perm>& generators) {
  for (const Perm& g : generators) {
    if (g.degree() != n)
      throw std::invalid_argument("generator degree mismatch");
  }
  std::vector<Perm> elements{Perm(n)};
  std::set<Perm> seen{Perm(n)};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Perm& g : generators) {
      Perm next = g * elements[head];
      if (seen.insert(next).second) {
        if (elements.size() >= kMaxGroupOrder)
          throw std::length_error("group too large to enumerate");
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

std::vector<Perm> symmetric_generators(std::size_t n) { return symmetric_generators(n, n); }

std::vector<Perm> symmetric_generators(std::size_t n, std::size_t k) {
  std::vector<Perm> gens;
  for (std::size_t i = 1; i < k; ++i)
    gens.push_back(Perm::transposition(n, static_cast<int>(i), static_cast<int>(i + 1)));
  return gens;
}

std::vector<Perm> left_transversal(const std::vector<Perm>& h_elements,
                                   const std::vector<Perm>& g_elements) {
  std::set<Perm> covered;
  std::vector<Perm> reps;
  for (const Perm& s : h_elements) {
    if (covered.count(s))
      continue;
    reps.push_back(s);
    for (const Perm& g : g_elements)
      covered.insert(s * g);
  }
  return reps;
}

std::vector<Perm> coset_reps_pair_stabilizer(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("coset_reps_pair_stabilizer needs n >= 2");
  std::vector<Perm> reps;
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    for (int j = i + 1; j <= static_cast<int>(n); ++j)
      reps.push_back(move_pair_to_top(n, i, j).inverse());
  }
  return reps;
}

Perm move_pair_to_top(std::size_t n, int i, int j) {
  const int top = static_cast<int>(n);
  if (i < 1 || j <= i || j > top)
    throw std::invalid_argument("move_pair_to_top: need 1 <= i < j <= n");
  std::vector<int> images(n);
  int next = 1;
  for (int k = 1; k <= top; ++k) {
    if (k == i)
      images[static_cast<std::size_t>(k - 1)] = top - 1;
    else if (k == j)
      images[static_cast<std::size_t>(k - 1)] = top;
    else
      images[static_cast<std::size_t>(k - 1)] = next++;
  }
  return Perm::from_images(std::move(images));
}

}  // namespace salg

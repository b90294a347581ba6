#include "gl3sw/weights.hpp"

#include <sstream>
#include <stdexcept>

namespace gl3sw {

namespace {

// (i, j) index pair of alpha_ij, zero-based.
std::pair<int, int> root_indices(Root r) {
  switch (r) {
    case Root::a12: return {0, 1};
    case Root::a23: return {1, 2};
    case Root::a13: return {0, 2};
    case Root::a21: return {1, 0};
    case Root::a32: return {2, 1};
    case Root::a31: return {2, 0};
  }
  throw std::logic_error("unreachable root tag");
}

}  // namespace

Weight root_vector(Root r) {
  auto [i, j] = root_indices(r);
  Weight w;
  w[i] = 1;
  w[j] = -1;
  return w;
}

bool root_positive(Root r) {
  return r == Root::a12 || r == Root::a23 || r == Root::a13;
}

Root root_negated(Root r) {
  switch (r) {
    case Root::a12: return Root::a21;
    case Root::a23: return Root::a32;
    case Root::a13: return Root::a31;
    case Root::a21: return Root::a12;
    case Root::a32: return Root::a23;
    case Root::a31: return Root::a13;
  }
  throw std::logic_error("unreachable root tag");
}

Weight shift_vector(RootShift s) { return s ? root_vector(*s) : Weight{}; }

Int pairing(const Weight& w, Root r) {
  auto [i, j] = root_indices(r);
  return w[i] - w[j];
}

bool dominance_leq(const Weight& lo, const Weight& hi) {
  Weight d = hi - lo;
  // d = n1*a12 + n2*a23 with n1, n2 >= 0 iff the partial sums are >= 0 and the total is 0.
  return d.sum() == 0 && d[0] >= 0 && d[0] + d[1] >= 0;
}

bool is_p_restricted(const Weight& w, Int p, int n) {
  Int bound = 1;
  for (int i = 0; i < n; ++i) bound *= p;
  bound -= 1;
  auto [d1, d2] = sl3_restrict(w);
  return 0 <= d1 && d1 <= bound && 0 <= d2 && d2 <= bound;
}

std::pair<Int, Int> sl3_restrict(const Weight& w) {
  return {w[0] - w[1], w[1] - w[2]};
}

Weight reflect(Reflection kind, const Weight& w, Int p) {
  switch (kind) {
    case Reflection::s2: return {w[2] + p - 2, w[1], w[0] - p + 2};
    case Reflection::s3: return {w[1] + p - 1, w[0] - p + 1, w[2]};
    case Reflection::s3p: return {w[0], w[2] + p - 1, w[1] - p + 1};
  }
  throw std::logic_error("unreachable reflection tag");
}

int WeylElement::sign() const {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (img[static_cast<size_t>(i)] > img[static_cast<size_t>(j)]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

Weight WeylElement::act(const Weight& w) const {
  Weight out;
  for (int i = 0; i < 3; ++i) out[img[static_cast<size_t>(i)]] = w[i];
  return out;
}

const std::array<WeylElement, 6>& weyl_group() {
  static const std::array<WeylElement, 6> group{{
      {{0, 1, 2}},  // id
      {{1, 0, 2}},  // (12)
      {{0, 2, 1}},  // (23)
      {{1, 2, 0}},  // (123)
      {{2, 0, 1}},  // (132)
      {{2, 1, 0}},  // (13)
  }};
  return group;
}

WeylElement w0() { return WeylElement{{2, 1, 0}}; }

Weight dual_weight(const Weight& w) { return {-w[2], -w[1], -w[0]}; }

Int Context::q() const {
  Int result = 1;
  for (int i = 0; i < f; ++i) result *= p;
  return result;
}

const Weight& WeightTuple::slot(int j) const {
  int n = f();
  return slots[static_cast<size_t>(((j % n) + n) % n)];
}

Weight& WeightTuple::slot(int j) {
  int n = f();
  return slots[static_cast<size_t>(((j % n) + n) % n)];
}

bool is_p_restricted(const WeightTuple& t, Int p) {
  for (const Weight& w : t.slots)
    if (!is_p_restricted(w, p)) return false;
  return true;
}

WeightTuple dualize(const WeightTuple& t) {
  WeightTuple out = t;
  for (Weight& w : out.slots) w = dual_weight(w);
  return out;
}

WeightTuple shift_slot(const WeightTuple& t, int j0, const Weight& vec) {
  WeightTuple out = t;
  out.slot(j0) += vec;
  return out;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << w[0] << ',' << w[1] << ',' << w[2];
  return os.str();
}

std::string to_string(const WeightTuple& t) {
  std::ostringstream os;
  for (int j = 0; j < t.f(); ++j) {
    if (j) os << ';';
    os << to_string(t.slots[static_cast<size_t>(j)]);
  }
  return os.str();
}

namespace {

Int parse_int(const std::string& s) {
  size_t pos = 0;
  Int value = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("trailing characters in integer '" + s + "'");
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

Weight parse_weight(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 3) throw std::invalid_argument("weight must be 'a,b,c': '" + text + "'");
  return {parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2])};
}

WeightTuple parse_tuple(const std::string& text) {
  WeightTuple t;
  for (const auto& part : split(text, ';')) t.slots.push_back(parse_weight(part));
  return t;
}

std::string shift_name(RootShift s) {
  if (!s) return "0";
  switch (*s) {
    case Root::a12: return "a12";
    case Root::a23: return "a23";
    case Root::a13: return "a13";
    case Root::a21: return "-a12";
    case Root::a32: return "-a23";
    case Root::a31: return "-a13";
  }
  throw std::logic_error("unreachable root tag");
}

RootShift parse_shift(const std::string& text) {
  if (text == "0") return std::nullopt;
  for (Root r : kAllRoots)
    if (shift_name(r) == text) return r;
  throw std::invalid_argument("unknown root name '" + text + "'");
}

}  // namespace gl3sw

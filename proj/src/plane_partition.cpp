#include "ppdyn/plane_partition.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace ppdyn {

PlanePartition::PlanePartition(int a, int b, int m) : a_(a), b_(b), m_(m) {
  if (a < 0 || b < 0 || m < 0)
    throw std::invalid_argument("PlanePartition: negative parameter");
  if (a * b > kMaxCells)
    throw std::invalid_argument("PlanePartition: box exceeds cell capacity");
  if (m > 127) throw std::invalid_argument("PlanePartition: bound exceeds 127");
}

PlanePartition PlanePartition::from_rows(int m, const std::vector<std::vector<int>>& rows) {
  int a = static_cast<int>(rows.size());
  int b = a == 0 ? 0 : static_cast<int>(rows[0].size());
  PlanePartition p(a, b, m);
  for (int i = 1; i <= a; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != b)
      throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 1; j <= b; ++j) p.set(i, j, rows[i - 1][j - 1]);
  }
  if (!p.valid()) throw std::invalid_argument("from_rows: not a plane partition");
  return p;
}

bool PlanePartition::valid() const {
  for (int i = 1; i <= a_; ++i)
    for (int j = 1; j <= b_; ++j) {
      int v = at(i, j);
      if (v < 0 || v > m_) return false;
      if (j < b_ && v < at(i, j + 1)) return false;
      if (i < a_ && v < at(i + 1, j)) return false;
    }
  return true;
}

long long PlanePartition::size() const {
  long long s = 0;
  for (int i = 1; i <= a_; ++i)
    for (int j = 1; j <= b_; ++j) s += at(i, j);
  return s;
}

long long PlanePartition::sym_size() const {
  long long s = 0;
  for (int i = 1; i <= a_; ++i)
    for (int j = i; j <= b_; ++j) s += at(i, j);
  return s;
}

bool PlanePartition::operator==(const PlanePartition& o) const {
  if (a_ != o.a_ || b_ != o.b_ || m_ != o.m_) return false;
  return std::equal(e_.begin(), e_.begin() + a_ * b_, o.e_.begin());
}

std::string PlanePartition::key() const {
  return std::string(reinterpret_cast<const char*>(e_.data()),
                     static_cast<size_t>(a_ * b_));
}

std::vector<std::vector<int>> PlanePartition::to_rows() const {
  std::vector<std::vector<int>> rows(static_cast<size_t>(a_));
  for (int i = 1; i <= a_; ++i) {
    rows[i - 1].resize(static_cast<size_t>(b_));
    for (int j = 1; j <= b_; ++j) rows[i - 1][j - 1] = at(i, j);
  }
  return rows;
}

std::string PlanePartition::to_string() const {
  std::ostringstream out;
  for (int i = 1; i <= a_; ++i) {
    for (int j = 1; j <= b_; ++j) {
      if (j > 1) out << ' ';
      out << at(i, j);
    }
    if (i < a_) out << '\n';
  }
  return out.str();
}

void PlanePartition::check_cell(int i, int j) const {
  if (i < 1 || i > a_ || j < 1 || j > b_)
    throw std::out_of_range("PlanePartition: cell out of range");
}

void PlanePartition::toggle(int i, int j) {
  check_cell(i, j);
  int up = std::min(j == 1 ? m_ : at(i, j - 1), i == 1 ? m_ : at(i - 1, j));
  int dn = std::max(i == a_ ? 0 : at(i + 1, j), j == b_ ? 0 : at(i, j + 1));
  set(i, j, up + dn - at(i, j));
}

void PlanePartition::file_toggle(int k) {
  if (k < -(a_ - 1) || k > b_ - 1)
    throw std::out_of_range("file_toggle: file index out of range");
  int ilo = std::max(1, 1 - k), ihi = std::min(a_, b_ - k);
  for (int i = ilo; i <= ihi; ++i) toggle(i, i + k);
}

void PlanePartition::rank_toggle(int k) {
  if (k < 1 || k > a_ + b_ - 1)
    throw std::out_of_range("rank_toggle: rank index out of range");
  int ilo = std::max(1, k + 1 - b_), ihi = std::min(a_, k);
  for (int i = ilo; i <= ihi; ++i) toggle(i, k + 1 - i);
}

void PlanePartition::row_fiber(int k) {
  check_cell(k, 1);
  for (int j = 1; j <= b_; ++j) toggle(k, j);
}

void PlanePartition::row_fiber_inv(int k) {
  check_cell(k, 1);
  for (int j = b_; j >= 1; --j) toggle(k, j);
}

void PlanePartition::col_fiber(int k) {
  check_cell(1, k);
  for (int i = 1; i <= a_; ++i) toggle(i, k);
}

void PlanePartition::col_fiber_inv(int k) {
  check_cell(1, k);
  for (int i = a_; i >= 1; --i) toggle(i, k);
}

void PlanePartition::promotion() {
  for (int k = -(a_ - 1); k <= b_ - 1; ++k) file_toggle(k);
}

void PlanePartition::promotion_inv() {
  for (int k = b_ - 1; k >= -(a_ - 1); --k) file_toggle(k);
}

void PlanePartition::rowmotion() {
  for (int k = 1; k <= a_ + b_ - 1; ++k) rank_toggle(k);
}

void PlanePartition::rowmotion_inv() {
  for (int k = a_ + b_ - 1; k >= 1; --k) rank_toggle(k);
}

void PlanePartition::complement() {
  PlanePartition old = *this;
  for (int i = 1; i <= a_; ++i)
    for (int j = 1; j <= b_; ++j) set(i, j, m_ - old.at(a_ + 1 - i, b_ + 1 - j));
}

void PlanePartition::transpose() {
  if (a_ != b_) throw std::domain_error("transpose: requires a square box");
  for (int i = 1; i <= a_; ++i)
    for (int j = i + 1; j <= b_; ++j) {
      int t = at(i, j);
      set(i, j, at(j, i));
      set(j, i, t);
    }
}

void PlanePartition::d_word() {
  for (int t = a_; t >= 1; --t)
    for (int s = a_; s >= a_ + 1 - t; --s) row_fiber_inv(s);
}

void PlanePartition::d_word_inv() {
  for (int t = 1; t <= a_; ++t)
    for (int s = a_ + 1 - t; s <= a_; ++s) row_fiber(s);
}

namespace words {

void pro_via_row_fibers(PlanePartition& p) {
  for (int s = p.rows(); s >= 1; --s) p.row_fiber(s);
}

void pro_via_col_fibers(PlanePartition& p) {
  for (int s = 1; s <= p.cols(); ++s) p.col_fiber_inv(s);
}

void row_via_row_fibers(PlanePartition& p) {
  for (int s = 1; s <= p.rows(); ++s) p.row_fiber(s);
}

void row_via_col_fibers(PlanePartition& p) {
  for (int s = 1; s <= p.cols(); ++s) p.col_fiber(s);
}

void co_via_file_toggles(PlanePartition& p) {
  int a = p.rows(), b = p.cols();
  for (int len = a + b - 1; len >= 1; --len)
    for (int k = -(a - 1); k <= -a + len; ++k) p.file_toggle(k);
}

void co_via_rank_toggles(PlanePartition& p) {
  int a = p.rows(), b = p.cols();
  for (int len = a + b - 1; len >= 1; --len)
    for (int k = 1; k <= len; ++k) p.rank_toggle(k);
}

void co_d_via_col_fibers(PlanePartition& p) {
  for (int len = 1; len <= p.cols() - 1; ++len)
    for (int s = len; s >= 1; --s) p.col_fiber(s);
}

}  // namespace words

GroupWord GroupWord::parse(const std::string& text) {
  GroupWord w;
  std::string token;
  std::vector<std::string> tokens;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      if (!token.empty()) tokens.push_back(std::move(token));
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  if (!token.empty()) tokens.push_back(std::move(token));
  for (const std::string& t : tokens) {
    std::string name = t;
    long long exp = 1;
    auto caret = t.find('^');
    if (caret != std::string::npos) {
      name = t.substr(0, caret);
      std::string e = t.substr(caret + 1);
      if (!e.empty() && e.front() == '{' && e.back() == '}') e = e.substr(1, e.size() - 2);
      size_t used = 0;
      try {
        exp = std::stoll(e, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("GroupWord: bad exponent in '" + t + "'");
      }
      if (used != e.size()) throw std::invalid_argument("GroupWord: bad exponent in '" + t + "'");
    }
    GroupFactor f;
    f.exp = exp;
    if (name == "Pro") f.op = GroupFactor::Op::Pro;
    else if (name == "Row") f.op = GroupFactor::Op::Row;
    else if (name == "Co") f.op = GroupFactor::Op::Co;
    else if (name == "Tr") f.op = GroupFactor::Op::Tr;
    else if (name == "TrCo") f.op = GroupFactor::Op::TrCo;
    else throw std::invalid_argument("GroupWord: unknown operator '" + name + "'");
    w.factors.push_back(f);
  }
  return w;
}

std::string GroupWord::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const GroupFactor& f : factors) {
    if (!first) out << ' ';
    first = false;
    switch (f.op) {
      case GroupFactor::Op::Pro: out << "Pro"; break;
      case GroupFactor::Op::Row: out << "Row"; break;
      case GroupFactor::Op::Co: out << "Co"; break;
      case GroupFactor::Op::Tr: out << "Tr"; break;
      case GroupFactor::Op::TrCo: out << "TrCo"; break;
    }
    if (f.exp != 1) out << '^' << f.exp;
  }
  return first ? "id" : out.str();
}

void GroupWord::apply(PlanePartition& p) const {
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    long long n = it->exp;
    switch (it->op) {
      case GroupFactor::Op::Pro:
        for (long long t = 0; t < n; ++t) p.promotion();
        for (long long t = 0; t > n; --t) p.promotion_inv();
        break;
      case GroupFactor::Op::Row:
        for (long long t = 0; t < n; ++t) p.rowmotion();
        for (long long t = 0; t > n; --t) p.rowmotion_inv();
        break;
      case GroupFactor::Op::Co:
        for (long long t = 0; t < std::abs(n); ++t) p.complement();
        break;
      case GroupFactor::Op::Tr:
        for (long long t = 0; t < std::abs(n); ++t) p.transpose();
        break;
      case GroupFactor::Op::TrCo:
        for (long long t = 0; t < std::abs(n); ++t) {
          p.complement();
          p.transpose();
        }
        break;
    }
  }
}

bool GroupWord::fixes(const PlanePartition& p) const {
  PlanePartition scratch = p;
  apply(scratch);
  return scratch == p;
}

}  // namespace ppdyn

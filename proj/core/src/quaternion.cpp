#include "origami/quaternion.hpp"

#include <algorithm>
#include <sstream>

namespace origami {

Quaternion Quaternion::from_point(std::span<const Rational> p) {
  if (p.size() != 4) throw Error(Errc::DimensionMismatch, "quaternions live in dimension 4");
  return {p[0], p[1], p[2], p[3]};
}

bool Quaternion::is_zero() const {
  return std::all_of(q_.begin(), q_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool Quaternion::is_real() const { return q_[1].is_zero() && q_[2].is_zero() && q_[3].is_zero(); }

Quaternion Quaternion::conj() const { return {q_[0], -q_[1], -q_[2], -q_[3]}; }

Rational Quaternion::norm() const { return q_[0] * q_[0] + q_[1] * q_[1] + q_[2] * q_[2] + q_[3] * q_[3]; }

std::string Quaternion::to_string() const {
  return q_[0].to_string() + " + " + q_[1].to_string() + " i + " + q_[2].to_string() + " j + " +
         q_[3].to_string() + " k";
}

Quaternion operator+(const Quaternion& x, const Quaternion& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}

Quaternion operator-(const Quaternion& x, const Quaternion& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}

Quaternion operator-(const Quaternion& x) { return {-x[0], -x[1], -x[2], -x[3]}; }

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  const auto& [a1, b1, c1, d1] = x.q_;
  const auto& [a2, b2, c2, d2] = y.q_;
  return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
          a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
}

Quaternion operator*(const Rational& s, const Quaternion& x) { return {s * x[0], s * x[1], s * x[2], s * x[3]}; }

Quaternion qinv(const Quaternion& x) {
  if (x.is_zero()) throw Error(Errc::ZeroQuaternion, "inverse of the zero quaternion");
  return x.norm().reciprocal() * x.conj();
}

std::optional<Quaternion> quat_intersect(const Quaternion& p, const Quaternion& q, const Quaternion& alpha,
                                         const Quaternion& beta) {
  if (alpha.is_zero() || beta.is_zero()) throw Error(Errc::ZeroDirection, "zero quaternion direction");
  const Quaternion den = alpha * beta.conj() - beta * alpha.conj();
  if (den.is_zero()) return std::nullopt;  // parallel or identical lines
  const Quaternion d = p - q;
  const Quaternion r = (beta * d.conj() - d * beta.conj()) * qinv(den);
  if (!r.is_real()) return std::nullopt;  // skew
  Quaternion point = p + r.real() * alpha;
  // point − q must be a real multiple of β.
  const Quaternion s = (point - q) * qinv(beta);
  if (!s.is_real()) return std::nullopt;
  return point;
}

OrderTable order_table(std::span<const Quaternion> angles) {
  const Quaternion zero, one(Rational(1));
  OrderTable table(angles.size(), std::vector<std::optional<Quaternion>>(angles.size()));
  for (std::size_t a = 0; a < angles.size(); ++a) {
    for (std::size_t b = 0; b < angles.size(); ++b) table[a][b] = quat_intersect(zero, one, angles[a], angles[b]);
  }
  return table;
}

std::vector<Quaternion> lipschitz_angles() {
  const Quaternion one(Rational(1));
  return {one, Quaternion::i(), Quaternion::i() - one, Quaternion::j(), Quaternion::j() - one, Quaternion::k(),
          Quaternion::k() - one};
}

std::vector<Quaternion> hurwitz_angles() {
  const Quaternion one(Rational(1));
  const Rational h(1, 2);
  return {one,
          Quaternion::i(),
          Quaternion::i() - one,
          Quaternion::j(),
          Quaternion::j() - one,
          {h, h, h, h},
          {h, -h, -h, -h}};
}

std::string table_cell(const std::optional<Quaternion>& cell) {
  if (!cell) return "∅";
  static const char* const units[] = {"", "i", "j", "k"};
  std::string out;
  for (std::size_t t = 0; t < 4; ++t) {
    const Rational& c = (*cell)[t];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational m = c.abs();
    if (out.empty()) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    if (t == 0) {
      out += m.to_string();
    } else if (m == Rational(1)) {
      out += units[t];
    } else {
      out += m.to_string() + units[t];
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

// Display width in code points, for alignment of "∅" and "α\β".
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width - std::min(width, display_width(s)), ' ');
}

std::vector<std::vector<std::string>> table_rows(std::span<const Quaternion> angles, const OrderTable& table) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"α\\β"};
  for (const auto& a : angles) header.push_back(table_cell(a));
  rows.push_back(std::move(header));
  for (std::size_t a = 0; a < angles.size(); ++a) {
    std::vector<std::string> row{table_cell(angles[a])};
    for (const auto& cell : table[a]) row.push_back(table_cell(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string order_table_markdown(std::span<const Quaternion> angles, const OrderTable& table) {
  const auto rows = table_rows(angles, table);
  std::vector<std::size_t> width(rows.front().size(), 3);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], display_width(row[c]));
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    out << '|';
    for (std::size_t c = 0; c < row.size(); ++c) out << ' ' << pad(row[c], width[c]) << " |";
    out << '\n';
  };
  emit(rows.front());
  out << '|';
  for (auto w : width) out << ' ' << std::string(w, '-') << " |";
  out << '\n';
  for (std::size_t r = 1; r < rows.size(); ++r) emit(rows[r]);
  return out.str();
}

std::string order_table_csv(std::span<const Quaternion> angles, const OrderTable& table) {
  std::ostringstream out;
  for (const auto& row : table_rows(angles, table)) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << '"' << row[c] << '"';
    out << '\n';
  }
  return out.str();
}

}  // namespace origami

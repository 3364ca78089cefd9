#include "tuniform/tables.hpp"

#include <sstream>

#include "tuniform/error.hpp"
#include "tuniform/oeis.hpp"
#include "tuniform/sphere_metrics.hpp"

namespace tuniform {

DecimalShape decimal_shape(const ExactRatio& value) {
  DecimalShape shape;
  BigInt num = value.numerator();
  if (num < 0) num = -num;
  BigInt den = value.denominator();
  shape.integer_part = num / den;
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  shape.preperiod = std::max(twos, fives);
  shape.terminates = den == 1;
  // 10 = 1 (mod m) exactly when m divides 9.
  shape.single_digit_repetend = den == 3 || den == 9;
  return shape;
}

std::string format_ratio(const ExactRatio& value, const std::optional<ExactRatio>& previous) {
  if (value.is_integer()) return value.numerator().str();
  const DecimalShape shape = decimal_shape(value);
  if (shape.single_digit_repetend) {
    std::string digits = value.truncated_decimal(shape.preperiod + 1);
    digits.insert(digits.size() - 1, "(");
    return digits + ")";
  }
  int digits = 2;
  if (previous) {
    while (digits < 40 && value.truncated_decimal(digits) == previous->truncated_decimal(digits)) ++digits;
  }
  if (shape.terminates && shape.preperiod <= digits) return value.truncated_decimal(shape.preperiod);
  return value.truncated_decimal(digits);
}

std::string format_ratio_cell(const RatioCell& cell, const std::optional<ExactRatio>& previous) {
  switch (cell.kind) {
    case RatioCell::Kind::absent: return "-";
    case RatioCell::Kind::infinite: return "∞";
    case RatioCell::Kind::finite: return format_ratio(*cell.value, previous);
  }
  return "?";
}

SequenceTable build_table(int t, int n_max, const BuildLimits& limits) {
  if (t < 4) throw Error(ErrorCode::invalid_t, "t must be >= 4, got " + std::to_string(t));
  if (n_max < 0) throw Error(ErrorCode::invalid_argument, "n_max must be >= 0");
  SequenceTable table;
  table.t = t;

  const int disc_radius = std::min(n_max, degenerate_radius_cap(t).value_or(n_max));
  const auto disc = build_disc(t, disc_radius, limits);
  const DiscMetrics metrics(disc);
  BigInt running = 0;
  for (int n = 0; n <= disc_radius; ++n) {
    TableColumn c;
    c.n = n;
    c.length = metrics.sphere_length(n);
    running += c.length;
    c.sum = running;
    if (n >= 1) c.ring = BigInt(metrics.ring_area(n));
    c.area = metrics.cumulative_area(n);
    if (n >= 1) c.ratio = RatioCell::of(c.area, c.length);
    table.columns.push_back(std::move(c));
  }
  if (n_max > disc_radius) {
    for (const auto& f : formal_sequences(t, n_max)) {
      if (f.n <= disc_radius) continue;
      TableColumn c;
      c.n = f.n;
      c.formal = true;
      c.length = f.length * t;
      c.sum = f.sum * t;
      c.ring = *f.ring * t;
      c.area = f.area * t;
      c.ratio = f.ratio;
      table.columns.push_back(std::move(c));
    }
  }
  return table;
}

std::string limit_label(int t) {
  if (t < 7) return {};
  const ExactRatio r(BigInt(t - 2), BigInt(t - 6));
  const BigInt num = r.numerator();
  const BigInt den = r.denominator();
  const BigInt num_root = isqrt(num);
  const BigInt den_root = isqrt(den);
  if (num_root * num_root == num && den_root * den_root == den) {
    return "→ " + ExactRatio(num_root, den_root).str();
  }
  if (den == 1) return "→ √" + num.str();
  return "→ √(" + r.str() + ")";
}

namespace {

std::string divided(const BigInt& value, int t) {
  if (value % t != 0) {
    throw Error(ErrorCode::metric_mismatch, value.str() + " is not divisible by t = " + std::to_string(t));
  }
  return BigInt(value / t).str();
}

std::string escaped(const std::string& label) {
  std::string out;
  for (char c : label) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_markdown(const SequenceTable& table) {
  const int t = table.t;
  const bool oeis_column = t >= 7;
  const std::string divisor = "/" + std::to_string(t);
  bool any_formal = false;
  std::ostringstream out;

  auto row = [&](const std::string& label, const std::string& unit, auto&& cell, const std::string& tail) {
    out << "| " << escaped(label) << " | " << unit << " |";
    for (const auto& c : table.columns) out << ' ' << cell(c) << " |";
    if (oeis_column) out << ' ' << tail << " |";
    out << '\n';
  };
  auto id = [&](SeriesKind kind) { return oeis_id(t, kind).value_or(""); };

  out << "| n |  |";
  for (const auto& c : table.columns) {
    out << ' ' << c.n << (c.formal ? "*" : "") << " |";
    any_formal = any_formal || c.formal;
  }
  if (oeis_column) out << " OEIS |";
  out << "\n|---|---|";
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << "---:|";
  if (oeis_column) out << "---|";
  out << '\n';

  row("|S_n|", divisor, [&](const TableColumn& c) { return divided(c.length, t); }, id(SeriesKind::length));
  row("sum |S_k|, k <= n", divisor, [&](const TableColumn& c) { return divided(c.sum, t); }, id(SeriesKind::sum));
  row("A_(n-1,n)", divisor, [&](const TableColumn& c) { return c.ring ? divided(*c.ring, t) : std::string("-"); },
      id(SeriesKind::ring));
  row("A_n", divisor, [&](const TableColumn& c) { return divided(c.area, t); }, id(SeriesKind::area));

  std::optional<ExactRatio> previous;
  row("A_n / |S_n|", "", [&](const TableColumn& c) {
    const std::string cell = format_ratio_cell(c.ratio, previous);
    previous = c.ratio.value;
    return cell;
  }, limit_label(t));

  if (t == 6) {
    std::optional<ExactRatio> prev_quadratic;
    row("6 A_n / |S_n|^2", "", [&](const TableColumn& c) {
      if (c.n == 0) return std::string("-");
      const auto cell = RatioCell::of(6 * c.area, c.length * c.length);
      const std::string text = format_ratio_cell(cell, prev_quadratic);
      prev_quadratic = cell.value;
      return text;
    }, "");
  }

  if (any_formal) {
    out << "\n\\* formal: no disc of a " << t << "-uniform complex has a sphere of this radius\n";
  }
  return out.str();
}

std::string render_csv(const SequenceTable& table, int precision) {
  std::ostringstream out;
  out << "t,n,formal,length,sum,ring,area,ratio_exact,ratio_decimal\n";
  for (const auto& c : table.columns) {
    out << table.t << ',' << c.n << ',' << (c.formal ? "true" : "false") << ',' << c.length << ',' << c.sum << ',';
    if (c.ring) out << *c.ring;
    out << ',' << c.area << ',';
    switch (c.ratio.kind) {
      case RatioCell::Kind::absent: out << ','; break;
      case RatioCell::Kind::infinite: out << "inf,inf"; break;
      case RatioCell::Kind::finite:
        out << c.ratio.value->str() << ',' << c.ratio.value->truncated_decimal(precision);
        break;
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json render_json(const SequenceTable& table, int precision) {
  nlohmann::json rows = nlohmann::json::array();
  std::optional<ExactRatio> previous;
  for (const auto& c : table.columns) {
    nlohmann::json row{{"t", table.t},
                       {"n", c.n},
                       {"formal", c.formal},
                       {"length", c.length.str()},
                       {"sum", c.sum.str()},
                       {"ring", c.ring ? nlohmann::json(c.ring->str()) : nlohmann::json(nullptr)},
                       {"area", c.area.str()},
                       {"ratio_exact", nullptr},
                       {"ratio_decimal", nullptr},
                       {"ratio_cell", format_ratio_cell(c.ratio, previous)}};
    if (c.ratio.kind == RatioCell::Kind::finite) {
      row["ratio_exact"] = c.ratio.value->str();
      row["ratio_decimal"] = c.ratio.value->truncated_decimal(precision);
    } else if (c.ratio.kind == RatioCell::Kind::infinite) {
      row["ratio_exact"] = "inf";
      row["ratio_decimal"] = "inf";
    }
    previous = c.ratio.value;
    rows.push_back(std::move(row));
  }
  return {{"t", table.t}, {"rows", std::move(rows)}};
}

}  // namespace tuniform

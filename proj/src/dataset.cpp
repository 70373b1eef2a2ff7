#include "revpref/dataset.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "revpref/errors.hpp"

namespace revpref {

std::string format_vec(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

Dataset::Dataset(Matrix prices, Matrix bundles)
    : T_(prices.rows()), L_(prices.cols()), prices_(std::move(prices)), bundles_(std::move(bundles)) {
  if (bundles_.rows() != T_ || bundles_.cols() != L_)
    throw InputError("price and bundle matrices disagree in shape");
  if (T_ > 0 && L_ == 0) throw InputError("observations must have at least one good");
  for (std::size_t t = 0; t < T_; ++t) {
    bool nonzero = false;
    for (std::size_t l = 0; l < L_; ++l) {
      double p = prices_(t, l), x = bundles_(t, l);
      if (!(p > 0.0) || !std::isfinite(p))
        throw InputError("price must be strictly positive at observation " + std::to_string(t + 1) +
                             ", good " + std::to_string(l + 1),
                         t + 1, l + 1);
      if (x < 0.0 || !std::isfinite(x))
        throw InputError("bundle must be nonnegative at observation " + std::to_string(t + 1) +
                             ", good " + std::to_string(l + 1),
                         t + 1, L_ + l + 1);
      if (x > 0.0) nonzero = true;
    }
    if (!nonzero)
      throw InputError("bundle must be nonzero at observation " + std::to_string(t + 1), t + 1);
  }
}

Vec Dataset::price(std::size_t t) const {
  Vec v(L_);
  for (std::size_t l = 0; l < L_; ++l) v[l] = prices_(t, l);
  return v;
}

Vec Dataset::bundle(std::size_t t) const {
  Vec v(L_);
  for (std::size_t l = 0; l < L_; ++l) v[l] = bundles_(t, l);
  return v;
}

double Dataset::wealth(std::size_t t) const {
  double s = 0.0;
  for (std::size_t l = 0; l < L_; ++l) s += prices_(t, l) * bundles_(t, l);
  return s;
}

double Dataset::cost(std::size_t t, const Vec& z) const {
  if (z.size() != L_) throw InputError("bundle has wrong length");
  double s = 0.0;
  for (std::size_t l = 0; l < L_; ++l) s += prices_(t, l) * z[l];
  return s;
}

Dataset Dataset::subset(const std::vector<std::size_t>& idx) const {
  Matrix p(idx.size(), L_), x(idx.size(), L_);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t l = 0; l < L_; ++l) {
      p(r, l) = prices_(idx[r], l);
      x(r, l) = bundles_(idx[r], l);
    }
  }
  return Dataset(std::move(p), std::move(x));
}

Dataset Dataset::extended(const Vec& p, const Vec& x) const {
  if (p.size() != L_ || x.size() != L_) throw InputError("extension has wrong length");
  Matrix np(T_ + 1, L_), nx(T_ + 1, L_);
  for (std::size_t t = 0; t < T_; ++t)
    for (std::size_t l = 0; l < L_; ++l) {
      np(t, l) = prices_(t, l);
      nx(t, l) = bundles_(t, l);
    }
  for (std::size_t l = 0; l < L_; ++l) {
    np(T_, l) = p[l];
    nx(T_, l) = x[l];
  }
  return Dataset(std::move(np), std::move(nx));
}

Dataset pair_dataset(const Dataset& d, std::size_t s, std::size_t t) {
  if (s == t) return d.subset({t});
  return d.subset({s, t});
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

Dataset load_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty input: expected header p1,...,pL,x1,...,xL");
  auto header = split_row(line);
  if (header.size() < 2 || header.size() % 2 != 0)
    throw InputError("header must list p1,...,pL,x1,...,xL", 1);
  std::size_t L = header.size() / 2;
  for (std::size_t i = 0; i < header.size(); ++i) {
    std::string want = (i < L ? "p" : "x") + std::to_string(i < L ? i + 1 : i - L + 1);
    if (trim(header[i]) != want)
      throw InputError("unexpected header field '" + trim(header[i]) + "', expected '" + want + "'",
                       1, i + 1);
  }

  std::vector<double> pdata, xdata;
  std::size_t T = 0, lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto cells = split_row(line);
    if (cells.size() != 2 * L)
      throw InputError("row has " + std::to_string(cells.size()) + " fields, expected " +
                           std::to_string(2 * L),
                       lineno);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::string cell = trim(cells[i]);
      std::size_t pos = 0;
      double v;
      try {
        v = std::stod(cell, &pos);
      } catch (const std::exception&) {
        throw InputError("cannot parse number '" + cell + "'", lineno, i + 1);
      }
      if (pos != cell.size()) throw InputError("trailing junk in '" + cell + "'", lineno, i + 1);
      (i < L ? pdata : xdata).push_back(v);
    }
    ++T;
  }

  Matrix p(T, L), x(T, L);
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t l = 0; l < L; ++l) {
      p(t, l) = pdata[t * L + l];
      x(t, l) = xdata[t * L + l];
    }
  try {
    return Dataset(std::move(p), std::move(x));
  } catch (InputError& e) {
    // dataset validation reports observation indices; shift to file lines
    throw InputError(std::string(e.what()) + " (csv line " + std::to_string(e.line + 1) + ")",
                     e.line + 1, e.column);
  }
}

Dataset load_csv_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  return load_csv(f);
}

void write_csv(std::ostream& out, const Dataset& d) {
  for (std::size_t l = 1; l <= d.L(); ++l) out << "p" << l << (l < d.L() ? "," : "");
  for (std::size_t l = 1; l <= d.L(); ++l) out << ",x" << l;
  out << "\n";
  out.precision(17);
  for (std::size_t t = 0; t < d.T(); ++t) {
    for (std::size_t l = 0; l < d.L(); ++l) out << (l ? "," : "") << d.prices()(t, l);
    for (std::size_t l = 0; l < d.L(); ++l) out << "," << d.bundles()(t, l);
    out << "\n";
  }
}

}  // namespace revpref

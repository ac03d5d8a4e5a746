#include "derlab/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace derlab {
namespace catalog {

namespace {

using Term = std::pair<size_t, Scalar>;  // (basis index 1-based, coefficient)

void set_product(Algebra& a, size_t i, size_t j, std::initializer_list<Term> terms) {
  for (const auto& [k, coeff] : terms) a.c(i - 1, j - 1, k - 1) = coeff;
}

// e_i e_j = e_{i+j} for 2 <= i+j <= bound
void fill_power_products(Algebra& a, size_t bound) {
  for (size_t i = 1; i <= a.dim(); ++i)
    for (size_t j = 1; j <= a.dim(); ++j)
      if (i + j >= 2 && i + j <= bound) a.c(i - 1, j - 1, i + j - 1) = Scalar(1);
}

const Scalar kOne(1);

Scalar require_alpha(const CatalogId& id) {
  if (!id.alpha) throw MissingOrForbiddenParameter("family " + id.family + " requires alpha");
  return *id.alpha;
}

void forbid_alpha(const CatalogId& id) {
  if (id.alpha) throw MissingOrForbiddenParameter("family " + id.family + " takes no alpha");
}

size_t require_dim(const CatalogId& id, size_t min_n) {
  if (id.n < min_n)
    throw DimensionOutOfRange("family " + id.family + " requires n >= " + std::to_string(min_n));
  return id.n;
}

void require_fixed_dim(const CatalogId& id, size_t fixed) {
  if (id.n != 0 && id.n != fixed)
    throw DimensionOutOfRange("family " + id.family + " has fixed dimension " +
                              std::to_string(fixed));
}

Algebra build_dim5(const CatalogId& id) {
  Algebra a(5, id.family);
  const std::string& f = id.family;
  // common head e1e1=e2, e1e2=e2e1=e3 shared by every 5-dim entry
  set_product(a, 1, 1, {{2, kOne}});
  set_product(a, 1, 2, {{3, kOne}});
  set_product(a, 2, 1, {{3, kOne}});
  if (f == "lam1") {
    set_product(a, 4, 4, {{3, kOne}});
    set_product(a, 5, 5, {{3, kOne}});
  } else if (f == "lam2") {
    set_product(a, 1, 4, {{3, kOne}});
    set_product(a, 4, 5, {{3, kOne}});
    set_product(a, 5, 4, {{3, kOne}});
  } else if (f == "lam3") {
    set_product(a, 1, 4, {{3, kOne}});
    set_product(a, 5, 5, {{3, kOne}});
  } else if (f == "lam4") {
    set_product(a, 1, 4, {{3, kOne}});
    set_product(a, 4, 4, {{3, kOne}});
    set_product(a, 5, 5, {{3, kOne}});
  } else if (f == "lam5") {
    set_product(a, 4, 5, {{3, kOne}});
    set_product(a, 5, 4, {{3, -kOne}});
  } else if (f == "lam6") {
    Scalar al = require_alpha(id);
    set_product(a, 4, 4, {{3, kOne}});
    set_product(a, 4, 5, {{3, kOne}});
    set_product(a, 5, 5, {{3, al}});
  } else if (f == "m1") {
    set_product(a, 4, 1, {{5, kOne}});
  } else if (f == "m2") {
    set_product(a, 4, 1, {{5, kOne}});
    set_product(a, 4, 4, {{3, kOne}});
  } else if (f == "m3") {
    set_product(a, 4, 1, {{5, kOne}});
    set_product(a, 4, 2, {{3, kOne}});
    set_product(a, 5, 1, {{3, kOne}});
  } else if (f == "m4") {
    set_product(a, 4, 1, {{5, kOne}});
    set_product(a, 4, 2, {{3, kOne}});
    set_product(a, 5, 1, {{3, kOne}});
    set_product(a, 4, 4, {{3, kOne}});
  } else if (f == "m5") {
    set_product(a, 1, 4, {{5, kOne}});
    set_product(a, 4, 1, {{3, kOne}, {5, kOne}});
  } else if (f == "m6") {
    set_product(a, 1, 4, {{5, kOne}});
    set_product(a, 4, 1, {{3, kOne}, {5, kOne}});
    set_product(a, 4, 4, {{3, kOne}});
  } else if (f == "m7") {
    Scalar al = require_alpha(id);
    set_product(a, 1, 4, {{5, kOne}});
    set_product(a, 4, 1, {{5, al}});
  } else if (f == "m8") {
    Scalar al = require_alpha(id);
    set_product(a, 1, 4, {{5, kOne}});
    set_product(a, 4, 1, {{5, al}});
    set_product(a, 4, 4, {{3, kOne}});
  } else if (f == "m9") {
    set_product(a, 4, 1, {{3, kOne}});
    set_product(a, 4, 4, {{5, kOne}});
  } else if (f == "m10") {
    set_product(a, 1, 4, {{5, kOne}});
    set_product(a, 4, 4, {{5, kOne}});
  } else if (f == "m11") {
    set_product(a, 1, 4, {{5, kOne}});
    set_product(a, 4, 4, {{3, kOne}, {5, kOne}});
  } else if (f == "m12") {
    set_product(a, 1, 4, {{5, kOne}});
    set_product(a, 4, 1, {{2, kOne}, {5, -kOne}});
    set_product(a, 5, 1, {{3, kOne}});
  } else if (f == "m13") {
    set_product(a, 1, 4, {{5, kOne}});
    set_product(a, 4, 1, {{2, kOne}, {5, -kOne}});
    set_product(a, 4, 4, {{3, kOne}});
    set_product(a, 5, 1, {{3, kOne}});
  } else if (f == "m14") {
    set_product(a, 1, 4, {{5, kOne}});
    set_product(a, 4, 1, {{2, kOne}, {5, kOne}});
    set_product(a, 4, 2, {{3, Scalar(2)}});
    set_product(a, 4, 4, {{5, Scalar(2)}});
    set_product(a, 5, 1, {{3, kOne}});
  } else if (f == "m15") {
    set_product(a, 1, 4, {{5, kOne}});
    set_product(a, 4, 1, {{2, kOne}, {5, kOne}});
    set_product(a, 4, 2, {{3, Scalar(2)}});
    set_product(a, 4, 4, {{3, kOne}, {5, Scalar(2)}});
    set_product(a, 5, 1, {{3, kOne}});
  } else if (f == "m16") {
    set_product(a, 1, 4, {{5, kOne}});
    set_product(a, 4, 1, {{5, kOne}});
    set_product(a, 4, 4, {{2, kOne}});
    set_product(a, 4, 5, {{3, kOne}});
    set_product(a, 5, 4, {{3, kOne}});
  } else if (f == "m17") {
    set_product(a, 1, 4, {{5, kOne}});
    set_product(a, 4, 1, {{3, kOne}, {5, kOne}});
    set_product(a, 4, 4, {{2, kOne}});
    set_product(a, 4, 5, {{3, kOne}});
    set_product(a, 5, 4, {{3, kOne}});
  } else if (f == "m18") {
    set_product(a, 1, 4, {{5, kOne}});
    set_product(a, 4, 1, {{5, -kOne}});
    set_product(a, 4, 4, {{2, kOne}});
    set_product(a, 5, 4, {{3, kOne}});
    set_product(a, 4, 5, {{3, -kOne}});
  } else if (f == "m19") {
    set_product(a, 1, 4, {{5, kOne}});
    set_product(a, 4, 1, {{2, kOne}});
    set_product(a, 4, 2, {{3, kOne}});
    set_product(a, 4, 4, {{3, kOne}, {5, kOne}});
    set_product(a, 5, 1, {{3, kOne}});
  } else if (f == "m20") {
    set_product(a, 1, 4, {{5, kOne}});
    set_product(a, 4, 1, {{3, kOne}, {5, kOne}});
    set_product(a, 4, 4, {{2, -kOne}, {5, Scalar(2)}});
    set_product(a, 4, 5, {{3, -kOne}});
    set_product(a, 5, 4, {{3, -kOne}});
  } else if (f == "m21") {
    Scalar al = require_alpha(id);
    if (al != Scalar::i() && al != -Scalar::i())
      throw MissingOrForbiddenParameter("m21 requires alpha in {i, -i}");
    set_product(a, 1, 4, {{5, kOne}});
    set_product(a, 4, 1, {{2, kOne - al}, {5, al}});
    set_product(a, 4, 2, {{3, Scalar(2)}});
    set_product(a, 4, 4, {{2, -al}, {3, kOne}, {5, kOne + al}});
    set_product(a, 4, 5, {{3, kOne}});
    set_product(a, 5, 1, {{3, kOne - al}});
    set_product(a, 5, 4, {{3, -al}});
  } else if (f == "m22") {
    Scalar al = require_alpha(id);
    set_product(a, 1, 4, {{5, kOne}});
    set_product(a, 4, 1, {{2, kOne - al}, {5, al}});
    set_product(a, 4, 2, {{3, kOne - al * al}});
    set_product(a, 4, 4, {{2, -al}, {5, kOne + al}});
    set_product(a, 4, 5, {{3, -(al * al)}});
    set_product(a, 5, 1, {{3, kOne - al}});
    set_product(a, 5, 4, {{3, -al}});
  } else {
    throw UnknownFamily(f);
  }
  if (id.alpha) a.set_label(f + "(" + id.alpha->str() + ")");
  return a;
}

}  // namespace

std::vector<FamilyInfo> list() {
  std::vector<FamilyInfo> out;
  out.push_back({"mu0", "n >= 1", ""});
  for (int i = 1; i <= 4; ++i) out.push_back({"mu1_" + std::to_string(i), "n > 3", ""});
  out.push_back({"mu2_1", "n >= 6", ""});
  out.push_back({"mu2_2", "n >= 6", "alpha in C"});
  out.push_back({"mu2_3", "n >= 6", ""});
  out.push_back({"mu2_4", "n >= 6", ""});
  for (int i = 1; i <= 5; ++i)
    out.push_back({"A" + std::to_string(i), "dim 3", i == 4 ? "alpha in C" : ""});
  for (int i = 1; i <= 6; ++i)
    out.push_back({"lam" + std::to_string(i), "dim 5", i == 6 ? "alpha in C" : ""});
  for (int i = 1; i <= 22; ++i) {
    std::string param;
    if (i == 7 || i == 8 || i == 22) param = "alpha in C";
    if (i == 21) param = "alpha in {i,-i}";
    out.push_back({"m" + std::to_string(i), "dim 5", param});
  }
  return out;
}

Algebra build(const CatalogId& id) {
  const std::string& f = id.family;
  if (f == "mu0") {
    forbid_alpha(id);
    size_t n = require_dim(id, 1);
    Algebra a(n, "mu0^" + std::to_string(n));
    fill_power_products(a, n);
    return a;
  }
  if (f.rfind("mu1_", 0) == 0) {
    forbid_alpha(id);
    size_t n = require_dim(id, 4);
    Algebra a(n, f + "^" + std::to_string(n));
    fill_power_products(a, n - 1);
    if (f == "mu1_1") {
    } else if (f == "mu1_2") {
      set_product(a, n, n, {{n - 1, kOne}});
    } else if (f == "mu1_3") {
      set_product(a, 1, n, {{n - 1, kOne}});
    } else if (f == "mu1_4") {
      set_product(a, 1, n, {{n - 1, kOne}});
      set_product(a, n, n, {{n - 1, kOne}});
    } else {
      throw UnknownFamily(f);
    }
    return a;
  }
  if (f.rfind("mu2_", 0) == 0) {
    size_t n = require_dim(id, 6);
    Algebra a(n, f + "^" + std::to_string(n));
    fill_power_products(a, n - 2);
    if (f == "mu2_1") {
      forbid_alpha(id);
      set_product(a, n - 1, 1, {{n, kOne}});
    } else if (f == "mu2_2") {
      Scalar al = require_alpha(id);
      set_product(a, 1, n - 1, {{n, kOne}});
      set_product(a, n - 1, 1, {{n, al}});
      a.set_label(f + "^" + std::to_string(n) + "(" + al.str() + ")");
    } else if (f == "mu2_3") {
      forbid_alpha(id);
      set_product(a, n - 1, n - 1, {{n, kOne}});
    } else if (f == "mu2_4") {
      forbid_alpha(id);
      set_product(a, 1, n - 1, {{n, kOne}});
      set_product(a, n - 1, n - 1, {{n, kOne}});
    } else {
      throw UnknownFamily(f);
    }
    return a;
  }
  if (f.size() == 2 && f[0] == 'A') {
    require_fixed_dim(id, 3);
    Algebra a(3, f);
    if (f == "A1") {
      forbid_alpha(id);
      set_product(a, 1, 1, {{2, kOne}});
    } else if (f == "A2") {
      forbid_alpha(id);
      set_product(a, 1, 2, {{3, kOne}});
      set_product(a, 2, 1, {{3, kOne}});
    } else if (f == "A3") {
      forbid_alpha(id);
      set_product(a, 1, 2, {{3, kOne}});
      set_product(a, 2, 1, {{3, -kOne}});
    } else if (f == "A4") {
      Scalar al = require_alpha(id);
      set_product(a, 1, 1, {{3, kOne}});
      set_product(a, 2, 2, {{3, al}});
      set_product(a, 1, 2, {{3, kOne}});
      a.set_label("A4(" + al.str() + ")");
    } else if (f == "A5") {
      forbid_alpha(id);
      set_product(a, 1, 1, {{2, kOne}});
      set_product(a, 1, 2, {{3, kOne}});
      set_product(a, 2, 1, {{3, kOne}});
    } else {
      throw UnknownFamily(f);
    }
    return a;
  }
  if (f.rfind("lam", 0) == 0 || (f[0] == 'm' && f != "mu0")) {
    require_fixed_dim(id, 5);
    if (!(f == "lam6" || f == "m7" || f == "m8" || f == "m21" || f == "m22")) forbid_alpha(id);
    return build_dim5(id);
  }
  throw UnknownFamily(f);
}

namespace {

[[noreturn]] void schema_error(size_t line_no, const std::string& msg) {
  throw SchemaError("line " + std::to_string(line_no) + ": " + msg);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// "e7" -> 7; 0 on mismatch
size_t parse_basis_symbol(const std::string& s) {
  if (s.size() < 2 || s[0] != 'e') return 0;
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return 0;
  return std::stoul(s.substr(1));
}

// Splits "2e3 + (1/2-i)e4 - e5" on top-level +/- into signed term strings.
std::vector<std::pair<bool, std::string>> split_terms(const std::string& rhs, size_t line_no) {
  std::vector<std::pair<bool, std::string>> out;
  int depth = 0;
  bool neg = false;
  std::string cur;
  for (char ch : rhs) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-') && !trim(cur).empty()) {
      out.emplace_back(neg, trim(cur));
      neg = ch == '-';
      cur.clear();
      continue;
    }
    if (depth == 0 && (ch == '+' || ch == '-') && trim(cur).empty()) {
      if (ch == '-') neg = !neg;
      continue;
    }
    cur += ch;
  }
  if (depth != 0) schema_error(line_no, "unbalanced parentheses");
  if (!trim(cur).empty()) out.emplace_back(neg, trim(cur));
  return out;
}

}  // namespace

Algebra parse_algebra(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  std::optional<size_t> dim;
  std::string label;
  Algebra a(0);
  std::vector<bool> seen;  // per (i,j) pair, duplicate guard
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos) schema_error(line_no, "expected '='");
    std::string lhs = trim(t.substr(0, eq));
    std::string rhs = trim(t.substr(eq + 1));
    if (lhs == "dim") {
      if (dim) schema_error(line_no, "duplicate dim");
      try {
        dim = std::stoul(rhs);
      } catch (...) {
        schema_error(line_no, "bad dim value '" + rhs + "'");
      }
      if (*dim == 0) schema_error(line_no, "dim must be >= 1");
      a = Algebra(*dim, label);
      seen.assign(*dim * *dim, false);
      continue;
    }
    if (lhs == "label") {
      label = rhs;
      a.set_label(label);
      continue;
    }
    // product line: ei*ej = <combination>
    if (!dim) schema_error(line_no, "dim must come before products");
    size_t star = lhs.find('*');
    if (star == std::string::npos) schema_error(line_no, "expected 'ei*ej' on left side");
    size_t i = parse_basis_symbol(trim(lhs.substr(0, star)));
    size_t j = parse_basis_symbol(trim(lhs.substr(star + 1)));
    if (i == 0 || j == 0) schema_error(line_no, "bad basis symbols in '" + lhs + "'");
    if (i > *dim || j > *dim)
      throw SchemaError("line " + std::to_string(line_no) + ": index out of range in '" + lhs +
                        "' for dim " + std::to_string(*dim));
    if (seen[(i - 1) * *dim + (j - 1)])
      throw SchemaError("line " + std::to_string(line_no) + ": duplicate product entry '" + lhs +
                        "'");
    seen[(i - 1) * *dim + (j - 1)] = true;
    if (rhs == "0") continue;
    for (const auto& [negated, term] : split_terms(rhs, line_no)) {
      // term := [coeff ['*']] e<k>;  complex coefficients are parenthesized
      std::string coeff_text, basis_text = term;
      size_t epos = term.rfind('e');
      if (epos == std::string::npos) schema_error(line_no, "term lacks basis symbol: '" + term + "'");
      coeff_text = trim(term.substr(0, epos));
      basis_text = trim(term.substr(epos));
      if (!coeff_text.empty() && coeff_text.back() == '*')
        coeff_text = trim(coeff_text.substr(0, coeff_text.size() - 1));
      if (!coeff_text.empty() && coeff_text.front() == '(' && coeff_text.back() == ')')
        coeff_text = trim(coeff_text.substr(1, coeff_text.size() - 2));
      size_t k = parse_basis_symbol(basis_text);
      if (k == 0) schema_error(line_no, "bad basis symbol in term '" + term + "'");
      if (k > *dim)
        throw SchemaError("line " + std::to_string(line_no) + ": index out of range in '" + term +
                          "' for dim " + std::to_string(*dim));
      Scalar coeff(1);
      if (!coeff_text.empty()) {
        try {
          coeff = Scalar::parse(coeff_text);
        } catch (const std::exception& e) {
          schema_error(line_no, std::string("bad coefficient: ") + e.what());
        }
      }
      if (negated) coeff = -coeff;
      a.c(i - 1, j - 1, k - 1) += coeff;
    }
  }
  if (!dim) throw SchemaError("missing dim field");
  return a;
}

std::string format_products(const Algebra& a) {
  std::ostringstream os;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) {
      Element p = a.basis_product(i, j);
      bool nonzero = false;
      for (const auto& s : p)
        if (!s.is_zero()) nonzero = true;
      if (!nonzero) continue;
      os << "e" << (i + 1) << "*e" << (j + 1) << " =";
      bool first = true;
      for (size_t k = 0; k < a.dim(); ++k) {
        if (p[k].is_zero()) continue;
        Scalar c = p[k];
        std::string cs = c.str();
        if (first) {
          os << " ";
          if (cs == "1")
            os << "";
          else if (cs == "-1")
            os << "-";
          else if (c.is_real() || c.re() == 0)
            os << cs;
          else
            os << "(" << cs << ")";
        } else {
          bool neg = c.is_real() && c.re() < 0;
          if (neg) {
            c = -c;
            cs = c.str();
          }
          os << (neg ? " - " : " + ");
          if (cs == "1")
            os << "";
          else if (c.is_real() || c.re() == 0)
            os << cs;
          else
            os << "(" << cs << ")";
        }
        os << "e" << (k + 1);
        first = false;
      }
      os << "\n";
    }
  return os.str();
}

}  // namespace catalog
}  // namespace derlab

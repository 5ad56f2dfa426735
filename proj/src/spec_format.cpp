#include "workbench/spec_format.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace workbench {

SpecError::SpecError(const std::string& source, std::size_t l, std::size_t c, const std::string& message)
    : InputError(source + ":" + std::to_string(l) + ":" + std::to_string(c) + ": " + message), line(l), column(c) {}

SemiCovariantStructure StructureSpec::semi() const {
  if (!has_gt()) throw InputError(name + ": structure has no Gt group");
  return make_semi_covariant(*g, *gt, coupling);
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

// A statement with an optional body of lines up to a matching "end".
struct Statement {
  Line head;
  std::vector<Line> body;
};

class Parser {
 public:
  Parser(std::string name, const std::string& text) : name_(std::move(name)), lines_(tokenize(text)) {}

  [[noreturn]] void fail(const Line& l, std::size_t tok, const std::string& msg) const {
    std::size_t col = tok < l.tokens.size() ? l.tokens[tok].column : (l.tokens.empty() ? 1 : l.tokens.back().column);
    throw SpecError(name_, l.number, col, msg);
  }
  [[noreturn]] void fail_at(std::size_t line, const std::string& msg) const { throw SpecError(name_, line, 1, msg); }

  const std::string& name() const { return name_; }

  std::vector<Statement> statements() {
    std::vector<Statement> out;
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      const Line& l = lines_[i];
      Statement s{l, {}};
      if (opens_block(l)) {
        std::size_t j = i + 1;
        for (; j < lines_.size() && lines_[j].tokens[0].text != "end"; ++j) s.body.push_back(lines_[j]);
        if (j == lines_.size()) fail(l, 0, "missing 'end' for this block");
        if (lines_[j].tokens.size() != 1) fail(lines_[j], 1, "unexpected token after 'end'");
        i = j;
      } else if (l.tokens[0].text == "end") {
        fail(l, 0, "'end' without an open block");
      }
      out.push_back(std::move(s));
    }
    return out;
  }

  std::size_t count(const Line& l, std::size_t tok) const {
    if (tok >= l.tokens.size()) fail(l, tok, "expected a non-negative integer");
    const std::string& t = l.tokens[tok].text;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      if (t.empty() || t[0] == '-' || t[0] == '+') throw std::invalid_argument("sign");
      v = std::stoull(t, &pos);
    } catch (const std::exception&) {
      fail(l, tok, "expected a non-negative integer, got '" + t + "'");
    }
    if (pos != t.size()) fail(l, tok, "expected a non-negative integer, got '" + t + "'");
    return static_cast<std::size_t>(v);
  }

  double real(const Line& l, std::size_t tok) const {
    if (tok >= l.tokens.size()) fail(l, tok, "expected a number");
    const std::string& t = l.tokens[tok].text;
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &pos);
    } catch (const std::exception&) {
      fail(l, tok, "expected a number, got '" + t + "'");
    }
    if (pos != t.size() || !std::isfinite(v)) fail(l, tok, "expected a finite number, got '" + t + "'");
    return v;
  }

  // p/q or a decimal, as a fraction of a full turn.
  double turn(const Line& l, std::size_t tok) const {
    if (tok >= l.tokens.size()) fail(l, tok, "expected a phase p/q");
    const std::string& t = l.tokens[tok].text;
    auto slash = t.find('/');
    if (slash == std::string::npos) return real(l, tok);
    try {
      std::size_t a = 0, b = 0;
      long long p = std::stoll(t.substr(0, slash), &a);
      long long q = std::stoll(t.substr(slash + 1), &b);
      if (a != slash || b != t.size() - slash - 1 || q == 0) throw std::invalid_argument("bad");
      return static_cast<double>(p % q) / static_cast<double>(q);
    } catch (const std::exception&) {
      fail(l, tok, "expected a phase p/q, got '" + t + "'");
    }
  }

  Complex complex(const Line& l, std::size_t tok) const {
    const std::string& t = l.tokens[tok].text;
    auto bad = [&]() -> Complex { fail(l, tok, "expected a complex literal, got '" + t + "'"); };
    auto number = [&](const std::string& s, bool imag_unit_ok) -> double {
      if (imag_unit_ok && (s.empty() || s == "+")) return 1.0;
      if (imag_unit_ok && s == "-") return -1.0;
      std::size_t pos = 0;
      double v = 0.0;
      try {
        v = std::stod(s, &pos);
      } catch (const std::exception&) {
        bad();
      }
      if (pos != s.size() || !std::isfinite(v)) bad();
      return v;
    };
    if (t.empty()) bad();
    if (t.back() != 'i') return {number(t, false), 0.0};
    const std::string body = t.substr(0, t.size() - 1);
    // split at the last sign that is not the leading one and does not follow an exponent
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        split = k;
        break;
      }
    if (split == std::string::npos) return {0.0, number(body, true)};
    return {number(body.substr(0, split), false), number(body.substr(split), true)};
  }

 private:
  static bool opens_block(const Line& l) {
    const auto& k = l.tokens[0].text;
    const std::size_t n = l.tokens.size();
    if (k == "unitary") return n == 2;
    if (k == "group") return n == 3 && l.tokens[2].text == "table";
    if (k == "action" || k == "cocycle") return n == 2;
    if (k == "coupling") return n == 1;
    return false;
  }

  std::string name_;
  std::vector<Line> lines_;
};

struct Builder {
  explicit Builder(Parser& parser) : p(parser) {}

  Parser& p;
  StructureSpec spec;
  std::map<std::string, Vec> unitaries;

  void expect_size(const Line& l, std::size_t n) {
    if (l.tokens.size() < n) p.fail(l, l.tokens.size(), "too few tokens");
    if (l.tokens.size() > n) p.fail(l, n, "unexpected token '" + l.tokens[n].text + "'");
  }

  const std::shared_ptr<const MatrixDirectSum>& algebra(const Line& l) {
    if (!spec.algebra) p.fail(l, 0, "'algebra' must come before this statement");
    return spec.algebra;
  }

  GroupPtr& group_slot(const Line& l, std::size_t tok) {
    if (tok >= l.tokens.size()) p.fail(l, tok, "expected a group name (G or Gt)");
    const auto& n = l.tokens[tok].text;
    if (n == "G") return spec.G;
    if (n == "Gt") return spec.Gt;
    p.fail(l, tok, "unknown group '" + n + "' (expected G or Gt)");
  }

  const GroupPtr& defined_group(const Line& l, std::size_t tok) {
    GroupPtr& g = group_slot(l, tok);
    if (!g) p.fail(l, tok, "group " + l.tokens[tok].text + " is not defined yet");
    return g;
  }

  const Vec& unitary(const Line& l, std::size_t tok) {
    if (tok >= l.tokens.size()) p.fail(l, tok, "expected a unitary name");
    auto it = unitaries.find(l.tokens[tok].text);
    if (it == unitaries.end()) p.fail(l, tok, "unknown unitary '" + l.tokens[tok].text + "'");
    return it->second;
  }

  std::size_t element(const Line& l, std::size_t tok, const FiniteGroup& g, const std::string& what) {
    std::size_t x = p.count(l, tok);
    if (x >= g.order()) p.fail(l, tok, what + " index " + std::to_string(x) + " out of range (order " +
                                          std::to_string(g.order()) + ")");
    return x;
  }

  void statement(const Statement& s) {
    const Line& l = s.head;
    const std::string& k = l.tokens[0].text;
    if (k == "tolerance") {
      expect_size(l, 2);
      double t = p.real(l, 1);
      if (t <= 0.0) p.fail(l, 1, "tolerance must be positive");
      spec.tolerance = t;
    } else if (k == "seed") {
      expect_size(l, 2);
      spec.seed = p.count(l, 1);
    } else if (k == "algebra") {
      if (spec.algebra) p.fail(l, 0, "algebra defined twice");
      if (l.tokens.size() < 2) p.fail(l, 1, "expected block sizes");
      std::vector<std::size_t> dims;
      for (std::size_t t = 1; t < l.tokens.size(); ++t) {
        dims.push_back(p.count(l, t));
        if (dims.back() == 0) p.fail(l, t, "block size must be positive");
      }
      spec.algebra = direct_sum(std::move(dims));
    } else if (k == "unitary") {
      define_unitary(s);
    } else if (k == "group") {
      define_group(s);
    } else if (k == "action") {
      define_action(s);
    } else if (k == "cocycle") {
      define_cocycle(s);
    } else if (k == "coupling") {
      define_coupling(s);
    } else {
      p.fail(l, 0, "unknown statement '" + k + "'");
    }
  }

  void define_unitary(const Statement& s) {
    const Line& l = s.head;
    const auto& A = algebra(l);
    if (l.tokens.size() < 2) p.fail(l, 1, "expected a unitary name");
    const std::string nm = l.tokens[1].text;
    if (unitaries.count(nm)) p.fail(l, 1, "unitary '" + nm + "' defined twice");
    Vec u;
    if (l.tokens.size() > 2) {
      if (l.tokens[2].text != "phase") p.fail(l, 2, "expected 'phase' or a block of rows");
      expect_size(l, 4);
      u = phase(p.turn(l, 3)) * A->unit();
    } else {
      const auto D = static_cast<Eigen::Index>(A->rep_dim());
      if (static_cast<Eigen::Index>(s.body.size()) != D)
        p.fail(l, 1, "unitary '" + nm + "' needs " + std::to_string(D) + " rows, got " + std::to_string(s.body.size()));
      Mat m(D, D);
      for (Eigen::Index r = 0; r < D; ++r) {
        const Line& row = s.body[static_cast<std::size_t>(r)];
        if (row.tokens[0].text != "row") p.fail(row, 0, "expected 'row'");
        expect_size(row, static_cast<std::size_t>(D) + 1);
        for (Eigen::Index c = 0; c < D; ++c) m(r, c) = p.complex(row, static_cast<std::size_t>(c) + 1);
      }
      try {
        u = A->from_matrix(m);
      } catch (const InputError&) {
        p.fail(l, 1, "unitary '" + nm + "' is not block diagonal for the algebra");
      }
    }
    if (unitary_residual(*A, u) > 1e-9) p.fail(l, 1, "'" + nm + "' is not unitary");
    unitaries.emplace(nm, std::move(u));
  }

  void define_group(const Statement& s) {
    const Line& l = s.head;
    GroupPtr& slot = group_slot(l, 1);
    if (slot) p.fail(l, 1, "group " + l.tokens[1].text + " defined twice");
    if (l.tokens.size() < 3) p.fail(l, 2, "expected a group kind");
    const std::string& kind = l.tokens[2].text;
    if (kind == "cyclic") {
      expect_size(l, 4);
      std::size_t n = p.count(l, 3);
      if (n == 0) p.fail(l, 3, "cyclic group order must be positive");
      slot = cyclic(n);
    } else if (kind == "product") {
      if (l.tokens.size() < 4) p.fail(l, 3, "expected cyclic factor orders");
      GroupPtr g;
      for (std::size_t t = 3; t < l.tokens.size(); ++t) {
        std::size_t n = p.count(l, t);
        if (n == 0) p.fail(l, t, "cyclic group order must be positive");
        g = g ? direct_product(g, cyclic(n)) : cyclic(n);
      }
      slot = g;
    } else if (kind == "symmetric") {
      expect_size(l, 4);
      std::size_t n = p.count(l, 3);
      if (n == 0 || n > 6) p.fail(l, 3, "symmetric group degree must be between 1 and 6");
      slot = symmetric_group(n);
    } else if (kind == "dual") {
      expect_size(l, 4);
      const GroupPtr& base = defined_group(l, 3);
      try {
        slot = dual(base).group;
      } catch (const InputError& e) {
        p.fail(l, 3, e.what());
      }
    } else if (kind == "table") {
      const std::size_t n = s.body.size();
      if (n == 0) p.fail(l, 2, "empty group table");
      std::vector<std::vector<std::size_t>> rows;
      for (const auto& row : s.body) {
        if (row.tokens[0].text != "row") p.fail(row, 0, "expected 'row'");
        expect_size(row, n + 1);
        std::vector<std::size_t> r;
        for (std::size_t t = 1; t <= n; ++t) {
          r.push_back(p.count(row, t));
          if (r.back() >= n) p.fail(row, t, "table entry out of range");
        }
        rows.push_back(std::move(r));
      }
      slot = FiniteGroup::from_table(std::move(rows));
    } else {
      p.fail(l, 2, "unknown group kind '" + kind + "'");
    }
  }

  std::optional<TwistedAction>& action_slot(const Line& l) {
    return l.tokens[1].text == "G" ? spec.g : spec.gt;
  }

  void define_action(const Statement& s) {
    const Line& l = s.head;
    const auto& A = algebra(l);
    const GroupPtr& G = defined_group(l, 1);
    auto& slot = action_slot(l);
    if (slot) p.fail(l, 0, "action for " + l.tokens[1].text + " defined twice");
    if (l.tokens.size() == 3) {
      if (l.tokens[2].text != "trivial") p.fail(l, 2, "expected 'trivial' or a block of entries");
      slot = trivial_action(G, A);
      return;
    }
    expect_size(l, 2);
    std::vector<std::optional<StarAutomorphism>> maps(G->order());
    maps[G->identity()] = StarAutomorphism::identity(A);
    for (const auto& e : s.body) {
      std::size_t x = element(e, 0, *G, "element");
      if (x == G->identity()) p.fail(e, 0, "the identity acts trivially; do not list it");
      if (maps[x]) p.fail(e, 0, "element " + std::to_string(x) + " listed twice");
      if (e.tokens.size() < 2) p.fail(e, 1, "expected trivial, ad or perm");
      const std::string& how = e.tokens[1].text;
      try {
        if (how == "trivial") {
          expect_size(e, 2);
          maps[x] = StarAutomorphism::identity(A);
        } else if (how == "ad") {
          expect_size(e, 3);
          maps[x] = ad(A, unitary(e, 2));
        } else if (how == "perm") {
          const std::size_t m = A->block_count();
          if (e.tokens.size() != m + 2 && e.tokens.size() != m + 3)
            p.fail(e, 2, "perm needs " + std::to_string(m) + " block indices and an optional unitary");
          BlockStructure bs;
          for (std::size_t k = 0; k < m; ++k) bs.sigma.push_back(p.count(e, k + 2));
          if (e.tokens.size() == m + 3) {
            bs.unitaries = A->to_blocks(unitary(e, m + 2));
          } else {
            for (std::size_t k = 0; k < m; ++k) {
              const auto d = static_cast<Eigen::Index>(A->block_dims()[k]);
              bs.unitaries.push_back(Mat::Identity(d, d));
            }
          }
          maps[x] = StarAutomorphism::structured(A, std::move(bs));
        } else {
          p.fail(e, 1, "expected trivial, ad or perm, got '" + how + "'");
        }
      } catch (const SpecError&) {
        throw;
      } catch (const InputError& err) {
        p.fail(e, 1, err.what());
      }
    }
    std::vector<StarAutomorphism> out;
    for (std::size_t x = 0; x < G->order(); ++x) {
      if (!maps[x]) p.fail_at(l.number, "action." + l.tokens[1].text + ": missing entry for element " + std::to_string(x));
      out.push_back(*maps[x]);
    }
    slot = untwisted_action(G, A, std::move(out));
  }

  // Entries "a b phase p/q" or "a b unitary NAME"; pairs with an identity default to 1.
  std::vector<Vec> table(const Statement& s, const FiniteGroup& left, const FiniteGroup& right,
                         const std::string& field) {
    const auto& A = algebra(s.head);
    const std::size_t n = left.order(), m = right.order();
    std::vector<std::optional<Vec>> t(n * m);
    for (const auto& e : s.body) {
      std::size_t a = element(e, 0, left, "first"), b = element(e, 1, right, "second");
      if (t[a * m + b]) p.fail(e, 0, field + ": pair (" + std::to_string(a) + "," + std::to_string(b) + ") listed twice");
      if (e.tokens.size() < 3) p.fail(e, 2, "expected 'phase' or 'unitary'");
      const std::string& how = e.tokens[2].text;
      expect_size(e, 4);
      if (how == "phase") t[a * m + b] = phase(p.turn(e, 3)) * A->unit();
      else if (how == "unitary") t[a * m + b] = unitary(e, 3);
      else p.fail(e, 2, "expected 'phase' or 'unitary', got '" + how + "'");
    }
    std::vector<Vec> out;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        if (t[a * m + b]) out.push_back(*t[a * m + b]);
        else if (a == left.identity() || b == right.identity()) out.push_back(A->unit());
        else
          p.fail_at(s.head.number, field + ": missing entry for pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    return out;
  }

  void define_cocycle(const Statement& s) {
    const Line& l = s.head;
    const GroupPtr& G = defined_group(l, 1);
    auto& slot = action_slot(l);
    if (!slot) p.fail(l, 1, "cocycle for " + l.tokens[1].text + " needs its action first");
    if (cocycle_seen_[l.tokens[1].text]++) p.fail(l, 0, "cocycle for " + l.tokens[1].text + " defined twice");
    if (l.tokens.size() == 3) {
      if (l.tokens[2].text != "trivial") p.fail(l, 2, "expected 'trivial' or a block of entries");
      return;
    }
    expect_size(l, 2);
    slot->cocycle = table(s, *G, *G, "cocycle." + l.tokens[1].text);
  }

  void define_coupling(const Statement& s) {
    const Line& l = s.head;
    const auto& A = algebra(l);
    if (!spec.G || !spec.Gt) p.fail(l, 0, "coupling needs both G and Gt");
    if (coupling_seen_) p.fail(l, 0, "coupling defined twice");
    coupling_seen_ = true;
    const std::size_t n = spec.G->order(), nt = spec.Gt->order();
    if (l.tokens.size() == 2) {
      const auto& how = l.tokens[1].text;
      if (how == "trivial") {
        spec.coupling.assign(n * nt, A->unit());
      } else if (how == "pairing") {
        if (!spec.G->is_abelian() || !spec.G->cyclic_decomposition() || nt != n)
          p.fail(l, 1, "pairing needs an abelian G given as cyclic factors and Gt = dual G");
        spec.coupling.clear();
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t xi = 0; xi < nt; ++xi) spec.coupling.push_back(pairing(*spec.G, x, xi) * A->unit());
      } else {
        p.fail(l, 1, "expected 'trivial', 'pairing' or a block of entries");
      }
      return;
    }
    spec.coupling = table(s, *spec.G, *spec.Gt, "coupling");
  }

  void finish() {
    if (!spec.algebra) p.fail_at(1, "missing 'algebra' statement");
    if (!spec.G) p.fail_at(1, "missing 'group G' statement");
    if (!spec.g) spec.g = trivial_action(spec.G, spec.algebra);
    if (spec.Gt) {
      if (!spec.gt) spec.gt = trivial_action(spec.Gt, spec.algebra);
      if (spec.coupling.empty()) spec.coupling.assign(spec.G->order() * spec.Gt->order(), spec.algebra->unit());
    }
  }

  std::map<std::string, int> cocycle_seen_;
  bool coupling_seen_ = false;
};

}  // namespace

StructureSpec parse_spec(const std::string& text, const std::string& name) {
  Parser p(name, text);
  Builder b(p);
  b.spec.name = name;
  b.spec.text = text;
  for (const auto& s : p.statements()) b.statement(s);
  b.finish();
  return std::move(b.spec);
}

StructureSpec load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str(), path);
}

}  // namespace workbench

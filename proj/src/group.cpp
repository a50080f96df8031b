#include "orbifold/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "orbifold/common.hpp"

namespace orbifold {

namespace {

using Perm = std::vector<int>;

// apply q first, then p
Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm identity_perm(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::string cycle_name(const Perm& p) {
  std::ostringstream os;
  std::vector<char> seen(p.size(), 0);
  bool any = false;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    any = true;
    os << "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) os << " ";
      os << (j + 1);
      first = false;
      j = static_cast<size_t>(p[j]);
    }
    os << ")";
  }
  if (!any) return "e";
  return os.str();
}

FiniteGroup close_perm_group(const std::vector<Perm>& gens, int degree, long max_order,
                             const std::string& name) {
  FiniteGroup g;
  g.name = name;
  std::vector<Perm> elems;
  std::map<Perm, int> index;
  Perm id = identity_perm(degree);
  elems.push_back(id);
  index[id] = 0;
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const Perm& gen : gens) {
      Perm y = compose(elems[head], gen);
      if (index.count(y)) continue;
      if (static_cast<long>(elems.size()) + 1 > max_order)
        throw TooLarge("group exceeds order cap " + std::to_string(max_order));
      index[y] = static_cast<int>(elems.size());
      elems.push_back(std::move(y));
    }
  }
  int n = static_cast<int>(elems.size());
  g.order = n;
  g.cayley.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(compose(elems[a], elems[b]));
      if (it == index.end()) throw Error("closure not closed");
      g.cayley[static_cast<size_t>(a) * n + b] = it->second;
    }
  g.inverse.resize(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0) {
        g.inverse[a] = b;
        break;
      }
  for (const Perm& gen : gens) g.generators.push_back(index.at(gen));
  g.perms = std::move(elems);
  g.element_names.resize(n);
  for (int a = 0; a < n; ++a) g.element_names[a] = cycle_name(g.perms[a]);
  return g;
}

Perm cycle_to_perm(const std::vector<int>& pts, int degree) {
  Perm p = identity_perm(degree);
  for (size_t i = 0; i < pts.size(); ++i) p[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}

// one generator: a product of cycles like "(1 2)(3 4)", applied left to right
Perm parse_perm_word(const std::string& word, int degree) {
  Perm acc = identity_perm(degree);
  size_t pos = 0;
  bool saw_cycle = false;
  while (pos < word.size()) {
    if (std::isspace(static_cast<unsigned char>(word[pos]))) {
      pos++;
      continue;
    }
    if (word[pos] != '(') throw SpecParseError("expected '(' in permutation: " + word);
    size_t close = word.find(')', pos);
    if (close == std::string::npos) throw SpecParseError("unbalanced '(' in permutation: " + word);
    std::istringstream is(word.substr(pos + 1, close - pos - 1));
    std::vector<int> pts;
    int v;
    while (is >> v) {
      if (v < 1 || v > degree) throw SpecParseError("point out of range in permutation: " + word);
      pts.push_back(v - 1);
    }
    std::set<int> uniq(pts.begin(), pts.end());
    if (uniq.size() != pts.size()) throw SpecParseError("repeated point in cycle: " + word);
    if (!pts.empty()) acc = compose(cycle_to_perm(pts, degree), acc);
    saw_cycle = true;
    pos = close + 1;
  }
  if (!saw_cycle) throw SpecParseError("empty permutation word: " + word);
  return acc;
}

std::vector<std::string> split_top_level_commas(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') depth++;
    if (ch == ')') depth--;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

int max_point(const std::string& gens_text) {
  int best = 0;
  size_t pos = 0;
  while (pos < gens_text.size()) {
    if (std::isdigit(static_cast<unsigned char>(gens_text[pos]))) {
      int v = 0;
      while (pos < gens_text.size() && std::isdigit(static_cast<unsigned char>(gens_text[pos]))) {
        v = v * 10 + (gens_text[pos] - '0');
        pos++;
      }
      best = std::max(best, v);
    } else {
      pos++;
    }
  }
  return best;
}

struct GenSet {
  std::vector<Perm> gens;
  int degree = 0;
};

// unit order: +1, -1, +i, -i, +j, -j, +k, -k; index = axis*2 + sign
int quat_mul(int x, int y) {
  static const int ax_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int ax_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  int a1 = x / 2, s1 = x % 2, a2 = y / 2, s2 = y % 2;
  int axis = ax_axis[a1][a2];
  int sign = (s1 + s2 + ax_sign[a1][a2]) % 2;
  return axis * 2 + sign;
}

GenSet quaternion_gens() {
  GenSet gs;
  gs.degree = 8;
  for (int u : {2, 4}) {  // left multiplication by i and by j
    Perm p(8);
    for (int x = 0; x < 8; ++x) p[x] = quat_mul(u, x);
    gs.gens.push_back(p);
  }
  return gs;
}

GenSet catalog_factor(const std::string& name) {
  GenSet gs;
  if (name == "Q8") return quaternion_gens();
  if (name.size() < 2) throw SpecParseError("unknown group spec: " + name);
  char kind = name[0];
  long n = 0;
  for (size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw SpecParseError("unknown group spec: " + name);
    n = n * 10 + (name[i] - '0');
  }
  if (n <= 0) throw SpecParseError("unknown group spec: " + name);
  switch (kind) {
    case 'Z': {
      gs.degree = static_cast<int>(n);
      Perm r(gs.degree);
      for (int i = 0; i < gs.degree; ++i) r[i] = (i + 1) % gs.degree;
      gs.gens.push_back(r);
      return gs;
    }
    case 'S': {
      if (n > 5) throw SpecParseError("symmetric groups supported up to S5");
      gs.degree = static_cast<int>(std::max<long>(n, 1));
      if (n >= 2) {
        Perm t = identity_perm(gs.degree);
        t[0] = 1;
        t[1] = 0;
        gs.gens.push_back(t);
        Perm c(gs.degree);
        for (int i = 0; i < gs.degree; ++i) c[i] = (i + 1) % gs.degree;
        gs.gens.push_back(c);
      }
      return gs;
    }
    case 'A': {
      if (n > 5) throw SpecParseError("alternating groups supported up to A5");
      gs.degree = static_cast<int>(std::max<long>(n, 1));
      if (n >= 3) {
        Perm c3 = identity_perm(gs.degree);
        c3[0] = 1;
        c3[1] = 2;
        c3[2] = 0;
        gs.gens.push_back(c3);
      }
      if (n == 4) {
        Perm c = identity_perm(4);
        c[1] = 2;
        c[2] = 3;
        c[3] = 1;
        gs.gens.push_back(c);
      }
      if (n == 5) {
        Perm c(5);
        for (int i = 0; i < 5; ++i) c[i] = (i + 1) % 5;
        gs.gens.push_back(c);
      }
      return gs;
    }
    case 'D': {
      if (n == 1) {
        gs.degree = 2;
        gs.gens.push_back(Perm{1, 0});
        return gs;
      }
      if (n == 2) {
        gs.degree = 4;
        gs.gens.push_back(Perm{1, 0, 2, 3});
        gs.gens.push_back(Perm{0, 1, 3, 2});
        return gs;
      }
      gs.degree = static_cast<int>(n);
      Perm r(gs.degree), s(gs.degree);
      for (int i = 0; i < gs.degree; ++i) {
        r[i] = (i + 1) % gs.degree;
        s[i] = (gs.degree - i) % gs.degree;
      }
      gs.gens.push_back(r);
      gs.gens.push_back(s);
      return gs;
    }
    default:
      throw SpecParseError("unknown group spec: " + name);
  }
}

std::vector<std::string> split_product(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : spec) {
    if (ch == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

int FiniteGroup::element_order(int a) const {
  int x = a, n = 1;
  while (x != 0) {
    x = mul(x, a);
    n++;
  }
  return n;
}

long FiniteGroup::exponent() const {
  long e = 1;
  for (int a = 0; a < order; ++a) e = std::lcm(e, static_cast<long>(element_order(a)));
  return e;
}

FiniteGroup group_from_spec(const std::string& raw, long max_order) {
  std::string spec = trim(raw);
  if (spec.empty()) throw SpecParseError("empty group spec");
  if (spec.rfind("perm:", 0) == 0) {
    std::string body = spec.substr(5);
    int degree = max_point(body);
    if (degree == 0) throw SpecParseError("no points in permutation spec: " + spec);
    std::vector<Perm> gens;
    for (const std::string& word : split_top_level_commas(body))
      gens.push_back(parse_perm_word(word, degree));
    return close_perm_group(gens, degree, max_order, spec);
  }
  std::vector<Perm> gens;
  int degree = 0;
  for (const std::string& part : split_product(spec)) {
    std::string factor = trim(part);
    if (factor.empty()) throw SpecParseError("empty factor in group spec: " + spec);
    GenSet gs = catalog_factor(factor);
    for (const Perm& p : gs.gens) {
      Perm q = identity_perm(degree + gs.degree);
      for (int i = 0; i < gs.degree; ++i) q[degree + i] = degree + p[i];
      gens.push_back(q);
    }
    degree += gs.degree;
  }
  for (Perm& p : gens) {
    Perm q = identity_perm(degree);
    for (size_t i = 0; i < p.size(); ++i) q[i] = p[i];
    p = std::move(q);
  }
  FiniteGroup g = close_perm_group(gens, std::max(degree, 1), max_order, spec);
  if (spec == "Q8") {
    static const char* unit_names[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    for (int a = 0; a < g.order; ++a) g.element_names[a] = unit_names[g.perms[a][0]];
  }
  return g;
}

void validate_group(const FiniteGroup& g) {
  int n = g.order;
  if (n <= 0 || static_cast<int>(g.cayley.size()) != n * n) throw Error("bad table size");
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) throw Error("identity axiom fails");
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) throw Error("inverse axiom fails");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) throw Error("associativity fails");
  if (closure_of(g, g.generators).size() != static_cast<size_t>(n))
    throw Error("generators do not generate");
  if (!g.perms.empty()) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (compose(g.perms[a], g.perms[b]) != g.perms[g.mul(a, b)])
          throw Error("permutation action inconsistent with table");
  }
}

ConjugacyData conjugacy_data(const FiniteGroup& g) {
  ConjugacyData cd;
  cd.class_of.assign(g.order, -1);
  for (int a = 0; a < g.order; ++a) {
    if (cd.class_of[a] >= 0) continue;
    int ci = static_cast<int>(cd.reps.size());
    std::set<int> mem;
    for (int x = 0; x < g.order; ++x) mem.insert(g.conj(x, a));
    cd.reps.push_back(a);
    cd.members.emplace_back(mem.begin(), mem.end());
    for (int m : cd.members.back()) cd.class_of[m] = ci;
  }
  for (int rep : cd.reps) cd.centralizers.push_back(centralizer_of(g, rep));
  return cd;
}

std::vector<int> centralizer_of(const FiniteGroup& g, int a) {
  std::vector<int> out;
  for (int x = 0; x < g.order; ++x)
    if (g.mul(x, a) == g.mul(a, x)) out.push_back(x);
  return out;
}

std::vector<int> center_members(const FiniteGroup& g) {
  std::vector<int> out;
  for (int x = 0; x < g.order; ++x) {
    bool central = true;
    for (int y = 0; y < g.order && central; ++y)
      if (g.mul(x, y) != g.mul(y, x)) central = false;
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<int> closure_of(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order, 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (int x : gens)
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  for (size_t head = 0; head < elems.size(); ++head) {
    for (size_t gi = 0; gi < elems.size(); ++gi) {
      int y = g.mul(elems[head], elems[gi]);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> derived_members(const FiniteGroup& g) {
  std::vector<int> comms;
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      comms.push_back(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
  return closure_of(g, comms);
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members) {
  std::vector<char> in(g.order, 0);
  for (int m : members) {
    if (m < 0 || m >= g.order) return false;
    in[m] = 1;
  }
  if (!in[0]) return false;
  for (int a : members)
    for (int b : members)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const std::vector<int>& members) {
  if (!is_subgroup(g, members)) return false;
  std::vector<char> in(g.order, 0);
  for (int m : members) in[m] = 1;
  for (int x = 0; x < g.order; ++x)
    for (int m : members)
      if (!in[g.conj(x, m)]) return false;
  return true;
}

std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& g) {
  ConjugacyData cd = conjugacy_data(g);
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> queue;
  std::vector<int> triv{0};
  found.insert(triv);
  queue.push_back(triv);
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<int> h = queue[head];
    std::vector<char> in(g.order, 0);
    for (int m : h) in[m] = 1;
    for (size_t ci = 0; ci < cd.reps.size(); ++ci) {
      if (in[cd.reps[ci]]) continue;
      std::vector<int> gens = h;
      gens.insert(gens.end(), cd.members[ci].begin(), cd.members[ci].end());
      std::vector<int> k = closure_of(g, gens);
      if (found.insert(k).second) queue.push_back(k);
    }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

SubgroupView subgroup_view(const FiniteGroup& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_subgroup(g, members)) throw Error("member list is not a subgroup");
  SubgroupView sv;
  int n = static_cast<int>(members.size());
  sv.to_parent = members;
  sv.from_parent.assign(g.order, -1);
  for (int i = 0; i < n; ++i) sv.from_parent[members[i]] = i;
  FiniteGroup& h = sv.group;
  h.order = n;
  h.name = g.name + "-sub" + std::to_string(n);
  h.cayley.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      h.cayley[static_cast<size_t>(a) * n + b] = sv.from_parent[g.mul(members[a], members[b])];
  h.inverse.resize(n);
  for (int a = 0; a < n; ++a) h.inverse[a] = sv.from_parent[g.inv(members[a])];
  if (!g.perms.empty())
    for (int m : members) h.perms.push_back(g.perms[m]);
  for (int m : members) h.element_names.push_back(g.element_names.empty() ? "" : g.element_names[m]);
  for (int a = 1; a < n; ++a) {
    std::vector<int> cl = closure_of(h, h.generators);
    if (std::binary_search(cl.begin(), cl.end(), a)) continue;
    h.generators.push_back(a);
  }
  return sv;
}

QuotientData quotient_with_section(const FiniteGroup& m, const std::vector<int>& normal_members) {
  std::vector<int> members = normal_members;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_subgroup(m, members)) throw NotNormal("member list is not a subgroup");
  if (!is_normal(m, members)) throw NotNormal("subgroup is not normal in " + m.name);
  std::vector<int> coset_rep(m.order);
  for (int x = 0; x < m.order; ++x) {
    int best = m.order;
    for (int n : members) best = std::min(best, m.mul(x, n));
    coset_rep[x] = best;
  }
  std::vector<int> reps;
  for (int x = 0; x < m.order; ++x)
    if (coset_rep[x] == x) reps.push_back(x);
  QuotientData qd;
  int q = static_cast<int>(reps.size());
  qd.projection.resize(m.order);
  for (int x = 0; x < m.order; ++x)
    qd.projection[x] =
        static_cast<int>(std::lower_bound(reps.begin(), reps.end(), coset_rep[x]) - reps.begin());
  qd.section = reps;
  FiniteGroup& gq = qd.quotient;
  gq.order = q;
  gq.name = m.name + "/" + std::to_string(members.size());
  gq.cayley.resize(static_cast<size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      gq.cayley[static_cast<size_t>(a) * q + b] = qd.projection[m.mul(reps[a], reps[b])];
  gq.inverse.resize(q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (gq.mul(a, b) == 0) {
        gq.inverse[a] = b;
        break;
      }
  for (int a = 0; a < q; ++a) {
    std::vector<int> p(q);
    for (int b = 0; b < q; ++b) p[b] = gq.mul(a, b);
    gq.perms.push_back(std::move(p));
  }
  for (int a = 0; a < q; ++a)
    gq.element_names.push_back(m.element_names.empty() ? "" : m.element_names[reps[a]]);
  std::set<int> gen_set;
  for (int g : m.generators)
    if (qd.projection[g] != 0) gen_set.insert(qd.projection[g]);
  gq.generators.assign(gen_set.begin(), gen_set.end());
  return qd;
}

std::vector<int> resolve_subgroup(const FiniteGroup& g, const std::string& raw) {
  std::string sel = trim(raw);
  if (sel == "center") return center_members(g);
  if (sel == "derived") return derived_members(g);
  if (sel == "trivial") return {0};
  if (sel == "full") {
    std::vector<int> all(g.order);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  if (sel.rfind("index:", 0) == 0) {
    long k = 0;
    try {
      k = std::stol(sel.substr(6));
    } catch (...) {
      throw SpecParseError("bad index selector: " + sel);
    }
    if (k <= 0 || g.order % k != 0)
      throw SpecParseError("index " + std::to_string(k) + " does not divide order " +
                           std::to_string(g.order));
    long target = g.order / k;
    std::vector<std::vector<int>> hits;
    for (const auto& ns : normal_subgroups(g))
      if (static_cast<long>(ns.size()) == target) hits.push_back(ns);
    if (hits.empty())
      throw SpecParseError("no normal subgroup of index " + std::to_string(k) + " in " + g.name);
    if (hits.size() > 1)
      throw AmbiguousSelector("several normal subgroups of index " + std::to_string(k) + " in " +
                              g.name);
    return hits[0];
  }
  if (sel.rfind("gens:", 0) == 0) {
    std::string body = sel.substr(5);
    std::vector<int> gens;
    for (const std::string& tokraw : split_top_level_commas(body)) {
      std::string tok = trim(tokraw);
      if (tok.empty()) continue;
      if (tok[0] == '(') {
        if (g.perms.empty()) throw SpecParseError("group has no permutation action for: " + tok);
        Perm p = parse_perm_word(tok, static_cast<int>(g.perms[0].size()));
        int found = -1;
        for (int a = 0; a < g.order; ++a)
          if (g.perms[a] == p) {
            found = a;
            break;
          }
        if (found < 0) throw SpecParseError("permutation not an element of " + g.name + ": " + tok);
        gens.push_back(found);
      } else {
        int idx = 0;
        try {
          idx = std::stoi(tok);
        } catch (...) {
          throw SpecParseError("bad generator token: " + tok);
        }
        if (idx < 0 || idx >= g.order)
          throw SpecParseError("element index out of range: " + tok);
        gens.push_back(idx);
      }
    }
    return closure_of(g, gens);
  }
  throw SpecParseError("unknown subgroup selector: " + sel);
}

}  // namespace orbifold

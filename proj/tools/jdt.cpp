// SPDX-License-Identifier: Apache-2.0
//
// jdt: enumerate minimal coset representatives, compute taquin and
// oracle coefficients, run verification suites, export heaps.

#include "jdt/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace jdt;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type, gcm_file, mode = "auto", format = "json", suite, out, folding;
  int marked = 0;
  int max_len = -1;
  int jobs = 1;
  bool equivariant = false;
  std::vector<std::string> words, ideals;
  std::string ambient;
};

CartanData diagram(const Options& o) {
  if (o.type.empty() == o.gcm_file.empty())
    throw UsageError("exactly one of --type and --gcm-file is required");
  if (!o.type.empty()) return load_diagram(o.type);
  std::ifstream in(o.gcm_file);
  if (!in) throw UsageError("cannot read " + o.gcm_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_diagram_json(ss.str());
}

int marked_index(const CartanData& c, const Options& o) {
  if (o.marked == 0 && !c.nodes.empty() && c.nodes.front() != 0)
    throw UsageError("--marked is required");
  try {
    return c.index(o.marked);
  } catch (const Error&) {
    throw UsageError("marked node " + std::to_string(o.marked) + " is not in the diagram");
  }
}

// Long marked roots use the cominuscule mode, short ones the minuscule mode.
Mode pick_mode(const CartanData& c, int marked, const std::string& m) {
  if (m == "minuscule") return Mode::minuscule;
  if (m == "cominuscule") return Mode::cominuscule;
  if (m != "auto") throw UsageError("--mode must be auto, minuscule or cominuscule");
  for (int i = 0; i < c.rank(); ++i)
    if (c.length_sq(i) > c.length_sq(marked)) return Mode::minuscule;
  for (int i = 0; i < c.rank(); ++i)
    if (c.length_sq(i) < c.length_sq(marked)) return Mode::cominuscule;
  return Mode::minuscule;
}

Context context(const Options& o) {
  CartanData c = diagram(o);
  int m = marked_index(c, o);
  return make_context(c, c.node(m), pick_mode(c, m, o.mode));
}

// "1,3,2" or "1 3 2" or "132" (single-digit ids); "e" is the identity.
Word parse_word(const CartanData& c, const std::string& text) {
  Word w;
  if (text == "e" || text.empty()) return w;
  bool sep = text.find_first_of(", ") != std::string::npos;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      w.push_back(c.index(std::stoi(cur)));
    } catch (const std::exception&) {
      throw UsageError("bad letter '" + cur + "' in word " + text);
    }
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '[' || ch == ']') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur += ch;
      if (!sep) flush();
    } else {
      throw UsageError("bad character in word " + text);
    }
  }
  flush();
  if (!is_reduced(c, w)) throw UsageError("word " + text + " is not reduced");
  return w;
}

json word_json(const CartanData& c, const Word& w) {
  json j = json::array();
  for (int i : w) j.push_back(c.node(i));
  return j;
}

std::string word_text(const CartanData& c, const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(c.node(w[i]));
  return s.empty() ? "e" : s;
}

// Generators of an ideal: [["alpha_i", k], ...] by increasing element index.
json ideal_json(const CartanData& c, const Heap& h, Mask m) {
  json j = json::array();
  for (Mask r = h.poset.maximal(m); r; r &= r - 1) {
    int e = __builtin_ctzll(r);
    int col = h.poset.color(e);
    j.push_back({c.labels[col], h.poset.color_count(col, h.poset.down_closure(bit(e)))});
  }
  return j;
}

json rational_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string rational_text(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void check_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (o.format == a) return;
  throw UsageError("unsupported --format " + o.format);
}

int cmd_enumerate(const Options& o) {
  check_format(o, {"json", "tsv"});
  CartanData c = diagram(o);
  int m = marked_index(c, o);
  if (o.max_len < 0) throw UsageError("--max-len is required");
  IntVec lambda(c.rank(), 0);
  lambda[m] = 1;
  Strata s = enumerate_min_reps(c, lambda, o.max_len);
  if (o.format == "json") {
    json j;
    j["diagram"] = c.tag;
    j["marked"] = c.node(m);
    j["max_len"] = o.max_len;
    j["finite"] = s.exhausted;
    j["counts"] = s.counts();
    json levels = json::array();
    for (auto& lv : s.level) {
      json l = json::array();
      for (const Coset& co : lv) l.push_back(word_json(c, co.w.word));
      levels.push_back(l);
    }
    j["levels"] = levels;
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << "length\tcount\twords\n";
    for (size_t l = 0; l < s.level.size(); ++l) {
      std::cout << l << "\t" << s.level[l].size() << "\t";
      for (size_t i = 0; i < s.level[l].size(); ++i)
        std::cout << (i ? " " : "") << word_text(c, s.level[l][i].w.word);
      std::cout << "\n";
    }
  }
  return 0;
}

// Elements named on the command line: words, or ideals of the ambient heap
// (or the generated context element when no ambient is given).
struct Named {
  std::vector<WeylElement> elems;
  bool have_ambient = false;
  WeylElement ambient;
};

WeylElement element_arg(const Context& ctx, const std::string& text, bool ideal) {
  if (!ideal) return canonicalize(ctx.cartan, parse_word(ctx.cartan, text));
  try {
    return generated_element(ctx, parse_generators(text));
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad ideal ") + text + ": " + e.what());
  }
}

Named named(const Context& ctx, const Options& o) {
  if (!o.words.empty() && !o.ideals.empty())
    throw UsageError("use either --word or --ideal, not both");
  Named n;
  if (!o.ambient.empty()) {
    bool gens = o.ambient.find('(') != std::string::npos || o.ambient.find('"') != std::string::npos;
    n.ambient = element_arg(ctx, o.ambient, gens);
    n.have_ambient = true;
    if (!in_context(ctx, n.ambient.word))
      throw UsageError("ambient is not in the " + ctx.describe() + " context");
  }
  bool ideal = !o.ideals.empty();
  for (const std::string& s : ideal ? o.ideals : o.words) {
    if (ideal && n.have_ambient) {
      Heap h = context_heap(ctx, n.ambient.word);
      Mask m = 0;
      for (const Generator& g : parse_generators(s)) {
        int e = h.poset.element(ctx.cartan.index(g.node), g.k);
        if (e < 0) throw UsageError("generator outside the ambient heap: " + s);
        m |= bit(e);
      }
      n.elems.push_back(ideal_to_element(ctx.cartan, h, h.poset.down_closure(m)));
    } else {
      n.elems.push_back(element_arg(ctx, s, ideal));
    }
  }
  return n;
}

std::string poly_text(const Schubert& g, const Poly& p) { return p.str(g.variable_names()); }

int cmd_coeff(const Options& o) {
  check_format(o, {"json", "tsv"});
  Context ctx = context(o);
  const CartanData& c = ctx.cartan;
  Named n = named(ctx, o);
  if (n.elems.size() < 2 || n.elems.size() > 3)
    throw UsageError("coeff needs u and v, and optionally w");
  const WeylElement& u = n.elems[0];
  const WeylElement& v = n.elems[1];
  WeylElement w = n.elems.size() == 3 ? n.elems[2] : n.ambient;
  if (n.elems.size() == 2 && !n.have_ambient)
    throw UsageError("without w an --ambient heap is required");
  if (!in_context(ctx, w.word)) throw UsageError("w is not in the " + ctx.describe() + " context");
  Heap h = context_heap(ctx, w.word);
  Mask mu = 0, mv = 0;
  if (!element_to_ideal(c, h, u, &mu) || !element_to_ideal(c, h, v, &mv))
    throw UsageError("u and v must lie below w");

  // Oracle, when the polynomial arithmetic supports the rank.
  std::unique_ptr<Schubert> g;
  if (c.rank() <= Poly::kMaxVars)
    g = std::make_unique<Schubert>(c, ctx.lambda(), std::max(w.length(), o.max_len));

  if (n.elems.size() == 2) {
    // Expansion of u (.) v over the ideals of the ambient heap.
    json arr = json::array();
    Expansion oracle;
    if (g) oracle = g->structure_constants(u.word, v.word);
    bool agree = true;
    std::vector<std::string> rows;
    for (const ProductTerm& t : taquin_product(ctx, h, mu, mv)) {
      json e;
      e["ideal"] = ideal_json(c, h, t.nu);
      e["word"] = word_json(c, t.w.word);
      e["t"] = t.t;
      e["m"] = rational_text(t.m);
      e["coeff"] = t.coeff;
      if (g) {
        auto it = oracle.find(t.w.word);
        BigInt oc = it == oracle.end() ? BigInt(0) : it->second;
        e["c"] = oc.str();
        agree = agree && oc == t.coeff;
      }
      if (o.equivariant && g) e["equivariant"] = poly_text(*g, g->equivariant_product(u.word, v.word)[t.w.word]);
      arr.push_back(e);
      rows.push_back(word_text(c, t.w.word) + "\t" + std::to_string(t.t) + "\t" + rational_text(t.m) +
                     "\t" + std::to_string(t.coeff));
    }
    if (o.format == "json") {
      std::cout << arr.dump(1) << "\n";
    } else {
      std::cout << "w\tt\tm\tcoeff\n";
      for (auto& r : rows) std::cout << r << "\n";
    }
    return agree ? 0 : 1;
  }

  long long t = t_coeff(h.poset, mu, mv, h.poset.all());
  Rational m = m_coeff(ctx, h.poset, mu, mv, h.poset.all());
  Rational tm = m * t;
  json j;
  j["context"] = ctx.describe();
  j["u"] = word_json(c, u.word);
  j["v"] = word_json(c, v.word);
  j["w"] = word_json(c, w.word);
  j["t"] = t;
  j["m"] = rational_text(m);
  j["tm"] = rational_json(tm);
  bool agree = true;
  if (g) {
    BigInt oc = g->structure_constant(u.word, v.word, w.word);
    agree = tm.denominator() == 1 && oc == tm.numerator();
    j["c"] = oc.str();
    j["agree"] = agree;
    if (o.equivariant) {
      auto eq = g->equivariant_product(u.word, v.word);
      auto it = eq.find(w.word);
      j["equivariant"] = it == eq.end() ? std::string("0") : poly_text(*g, it->second);
      json res = json::object();
      for (auto& [x, p] : g->restrictions_at(w.word)) res[word_text(c, x)] = poly_text(*g, p);
      j["restrictions_at_w"] = res;
    }
  }
  if (o.format == "json") {
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << "t\tm\ttm\tc\tagree\n"
              << t << "\t" << rational_text(m) << "\t" << rational_text(tm) << "\t"
              << (g ? j["c"].get<std::string>() : "-") << "\t"
              << (g ? (agree ? "true" : "false") : "-") << "\n";
  }
  return agree ? 0 : 1;
}

int cmd_verify(const Options& o) {
  check_format(o, {"json", "tsv"});
  std::vector<std::string> names;
  if (o.suite == "all") names = suite_names();
  else if (std::find(suite_names().begin(), suite_names().end(), o.suite) != suite_names().end())
    names = {o.suite};
  else
    throw UsageError("unknown suite '" + o.suite + "'");
  SuiteOptions so;
  so.jobs = std::max(1, o.jobs);
  bool ok = true;
  json all = json::array();
  for (const std::string& n : names) {
    SuiteReport r = run_suite(n, so);
    ok = ok && r.ok();
    if (o.format == "json") {
      all.push_back({{"suite", r.name}, {"ok", r.ok()}, {"checks", r.checks},
                     {"failures", r.failures}, {"info", r.info}});
    } else {
      std::cout << r.name << "\t" << (r.ok() ? "ok" : "FAILED") << "\t" << r.checks << " checks\n";
      for (auto& i : r.info) std::cout << "  " << i << "\n";
      for (auto& f : r.failures) std::cout << "  FAIL " << f << "\n";
    }
    std::cerr << n << ": " << r.seconds << " s\n";
  }
  if (o.format == "json") std::cout << all.dump(1) << "\n";
  return ok ? 0 : 1;
}

std::string heap_text(const Context& ctx, const Heap& h, const std::string& name,
                      const std::string& format) {
  const CartanData& c = ctx.cartan;
  if (format == "dot") return heap_to_dot(c, h, name);
  if (format == "json") {
    json j;
    j["name"] = name;
    j["word"] = word_json(c, h.word);
    json el = json::array();
    for (int e = 0; e < h.size(); ++e) {
      json covers = json::array();
      for (Mask m = h.poset.lower_covers(e); m; m &= m - 1) covers.push_back(__builtin_ctzll(m));
      el.push_back({{"color", c.labels[h.poset.color(e)]}, {"below", covers}});
    }
    j["elements"] = el;
    j["peaks"] = ideal_json(c, h, peaks(h));
    return j.dump(1) + "\n";
  }
  std::ostringstream os;
  os << "element\tcolor\tlower_covers\n";
  for (int e = 0; e < h.size(); ++e) {
    os << e << "\t" << c.labels[h.poset.color(e)] << "\t";
    bool first = true;
    for (Mask m = h.poset.lower_covers(e); m; m &= m - 1) {
      os << (first ? "" : ",") << __builtin_ctzll(m);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

int cmd_export_folding(const Options& o) {
  check_format(o, {"json", "tsv"});
  std::ifstream in(o.folding);
  if (!in) throw UsageError("cannot read " + o.folding);
  std::stringstream ss;
  ss << in.rdbuf();
  FoldingSpec f = load_folding_spec(ss.str());
  const CartanData& fc = f.pair.folded;
  const CartanData& ac = f.pair.ambient;
  Context ctx = make_context(fc, fc.node(f.marked_folded), Mode::minuscule);
  int len = o.max_len < 0 ? 8 : o.max_len;
  json j;
  j["ambient"] = ac.tag;
  j["folded"] = json::parse(diagram_to_json(fc));
  json rows = json::array();
  std::vector<std::string> tsv;
  for (auto& lv : context_elements(ctx, len))
    for (const WeylElement& w : lv) {
      WeylElement up = unfold_minuscule(f, w.word);
      rows.push_back({{"word", word_json(fc, w.word)}, {"unfolded", word_json(ac, up.word)}});
      tsv.push_back(word_text(fc, w.word) + "\t" + word_text(ac, up.word));
    }
  j["classes"] = rows;
  if (o.format == "json") {
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << "folded\tunfolded\n";
    for (auto& r : tsv) std::cout << r << "\n";
  }
  return 0;
}

int cmd_export(const Options& o) {
  if (!o.folding.empty()) return cmd_export_folding(o);
  check_format(o, {"json", "tsv", "dot"});
  Context ctx = context(o);
  Named n = named(ctx, o);
  std::vector<std::pair<std::string, Heap>> heaps;
  if (n.elems.size() >= 2) return cmd_coeff(o);
  if (n.elems.size() == 1 || n.have_ambient) {
    const WeylElement& w = n.elems.empty() ? n.ambient : n.elems[0];
    if (!in_context(ctx, w.word)) throw UsageError("element is not in the " + ctx.describe() + " context");
    heaps.push_back({"heap_" + word_text(ctx.cartan, w.word), context_heap(ctx, w.word)});
  } else {
    if (o.max_len < 0) throw UsageError("--max-len or an element is required");
    auto els = context_elements(ctx, o.max_len);
    if (static_cast<int>(els.size()) > o.max_len)
      for (const WeylElement& w : els[o.max_len])
        heaps.push_back({"heap_" + word_text(ctx.cartan, w.word), context_heap(ctx, w.word)});
  }
  for (auto& name_heap : heaps)
    for (char& ch : name_heap.first)
      if (ch == ',') ch = '_';
  const std::string ext = o.format == "dot" ? ".dot" : o.format == "json" ? ".json" : ".tsv";
  if (o.out.empty()) {
    for (auto& [name, h] : heaps) std::cout << heap_text(ctx, h, name, o.format);
  } else {
    std::filesystem::create_directories(o.out);
    for (auto& [name, h] : heaps) {
      std::ofstream f(std::filesystem::path(o.out) / (name + ext));
      f << heap_text(ctx, h, name, o.format);
      if (!f) throw std::runtime_error("cannot write " + name + ext);
      std::cout << (std::filesystem::path(o.out) / (name + ext)).string() << "\n";
    }
  }
  return 0;
}

void add_diagram(CLI::App* s, Options& o) {
  s->add_option("--type", o.type, "catalog diagram (A3, F4, E8, affine-E7-1, tw-affine-F4-2, ...)");
  s->add_option("--gcm-file", o.gcm_file, "JSON file with a generalized Cartan matrix");
  s->add_option("--marked", o.marked, "marked node id");
  s->add_option("--mode", o.mode, "auto, minuscule or cominuscule");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Jeu de taquin and Schubert structure constants"};
  app.require_subcommand(1);
  auto* en = app.add_subcommand("enumerate", "minimal coset representatives by length");
  add_diagram(en, o);
  en->add_option("--max-len", o.max_len, "maximal length");
  en->add_option("--format", o.format, "json or tsv");

  auto* co = app.add_subcommand("coeff", "t, m, t*m and the oracle constant");
  add_diagram(co, o);
  co->add_option("--word", o.words, "u, v and optionally w as words (1,3,2)")
      ->expected(1)
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  co->add_option("--ideal", o.ideals, "u, v and optionally w as ideal generators")
      ->expected(1)
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  co->add_option("--ambient", o.ambient, "ambient element (word or generators)");
  co->add_option("--max-len", o.max_len, "oracle enumeration length");
  co->add_option("--format", o.format, "json or tsv");
  co->add_flag("--equivariant", o.equivariant, "include equivariant polynomials");

  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("--suite,suite", o.suite, "suite name or 'all'")->required();
  ve->add_option("--jobs", o.jobs, "worker threads");
  ve->add_option("--format", o.format, "json or tsv");

  auto* ex = app.add_subcommand("export", "export heaps, expansions or a folding");
  add_diagram(ex, o);
  ex->add_option("--word", o.words, "element word")
      ->expected(1)
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  ex->add_option("--ideal", o.ideals, "element as ideal generators")
      ->expected(1)
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  ex->add_option("--ambient", o.ambient, "ambient element");
  ex->add_option("--max-len", o.max_len, "export every context heap of this length");
  ex->add_option("--format", o.format, "dot, json or tsv");
  ex->add_flag_callback("--dot", [&] { o.format = "dot"; }, "same as --format dot");
  ex->add_option("--out", o.out, "output directory (one file per heap)");
  ex->add_option("--folding", o.folding, "folding spec JSON");
  ex->add_flag("--equivariant", o.equivariant, "include equivariant polynomials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (en->parsed()) return cmd_enumerate(o);
    if (co->parsed()) return cmd_coeff(o);
    if (ve->parsed()) return cmd_verify(o);
    if (ex->parsed()) return cmd_export(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

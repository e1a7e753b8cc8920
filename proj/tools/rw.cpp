// rw: command-line front end over the library. Every leaf command fills a
// certificate; --json switches the rendering.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "rw/apxgroup.hpp"
#include "rw/cert.hpp"
#include "rw/density.hpp"
#include "rw/fink.hpp"
#include "rw/graphreg.hpp"
#include "rw/leth.hpp"
#include "rw/radopr.hpp"
#include "rw/ramsey.hpp"
#include "rw/structure.hpp"

namespace {

using namespace rw;

struct Run {
    u64 seed = 1;
    u64 budget = default_budget;
    bool json = false;
    std::string inputs;  // canonical inputs, digested into the certificate
    std::string op;
    Json w = Json::object();
    bool verified = false;
    int exit = 0;
    std::optional<std::string> raw;  // text-mode output that replaces the report (gen)
};

Run run;

void status(SearchStatus s) {
    run.w["status"] = std::string(to_string(s));
    if (s == SearchStatus::budget) run.exit = 2;
}

// ---------------------------------------------------------------------------
// Argument parsing

std::vector<std::string> split(const std::string& s, const std::string& seps) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (seps.find(ch) != std::string::npos) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

i64 to_i64(const std::string& s) {
    std::size_t used = 0;
    i64 v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw InputError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw InputError("not an integer: '" + s + "'");
    return v;
}

std::vector<i64> ints(const std::string& s) {
    std::vector<i64> out;
    for (auto& t : split(s, ", ")) out.push_back(to_i64(t));
    return out;
}

Rational rat(const std::string& s) { return parse_rational(s); }

// "N" means [1,N]; "lo:hi" is explicit
Interval window_arg(const std::string& s) {
    auto c = s.find(':');
    if (c == std::string::npos) return Interval(1, to_i64(s));
    return Interval(to_i64(s.substr(0, c)), to_i64(s.substr(c + 1)));
}

// "1-5,8,10-12"
std::vector<int> vertex_list(const std::string& s) {
    std::vector<int> out;
    for (auto& t : split(s, ", ")) {
        auto d = t.find('-', 1);
        if (d == std::string::npos) {
            out.push_back(static_cast<int>(to_i64(t)));
        } else {
            i64 a = to_i64(t.substr(0, d)), b = to_i64(t.substr(d + 1));
            if (a > b) throw InputError("bad vertex range '" + t + "'");
            for (i64 v = a; v <= b; ++v) out.push_back(static_cast<int>(v));
        }
    }
    return out;
}

std::pair<std::string, int> rule_arg(const std::string& s) {
    auto c = s.find(':');
    if (c == std::string::npos) throw InputError("rule: expected name:param, got '" + s + "'");
    i64 p = to_i64(s.substr(c + 1));
    if (p < 1) throw InputError("rule: parameter must be >= 1");
    return {s.substr(0, c), static_cast<int>(p)};
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

IntSet load_set(const std::string& path) {
    std::istringstream in(slurp(path));
    IntSet a = read_set(in, path);
    std::ostringstream canon;
    write_set(canon, a);
    run.inputs += "set\n" + canon.str();
    return a;
}

// Window override: keep the members inside it.
IntSet load_set(const std::string& path, const std::string& window) {
    IntSet a = load_set(path);
    return window.empty() ? a : a.restricted(window_arg(window));
}

SimpleGraph load_graph(const std::string& path) {
    std::istringstream in(slurp(path));
    SimpleGraph g = read_graph(in);
    std::ostringstream canon;
    write_graph(canon, g);
    run.inputs += "graph\n" + canon.str();
    return g;
}

// Coloring file: colors of 1, 2, ... in order, whitespace separated, '#' comments.
Coloring load_coloring(const std::string& file, const std::string& rule, i64 n, int r_hint = 0) {
    std::vector<int> a;
    int r = 1;
    if (!file.empty()) {
        std::istringstream in(slurp(file));
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            for (auto& t : split(line, " \t,\r")) {
                i64 c;
                try {
                    c = to_i64(t);
                } catch (const InputError& e) {
                    throw InputError(file + ":" + std::to_string(lineno) + ": " + e.what());
                }
                if (c < 1) throw InputError(file + ":" + std::to_string(lineno) + ": colors start at 1");
                a.push_back(static_cast<int>(c));
                r = std::max(r, static_cast<int>(c));
            }
        }
        if (n > 0 && static_cast<i64>(a.size()) != n)
            throw InputError(file + ": expected " + std::to_string(n) + " colors, found " + std::to_string(a.size()));
        n = static_cast<i64>(a.size());
    } else {
        if (rule.empty()) throw InputError("need --coloring FILE or --rule NAME:PARAM");
        if (n < 1) throw InputError("need --n for a rule-based coloring");
        auto [name, p] = rule_arg(rule);
        std::mt19937_64 rng(run.seed);
        if (name == "mod") {
            r = p;
            for (i64 x = 1; x <= n; ++x) a.push_back(static_cast<int>(x % p) + 1);
        } else if (name == "random") {
            r = p;
            for (i64 x = 1; x <= n; ++x) a.push_back(static_cast<int>(rng() % static_cast<u64>(p)) + 1);
        } else if (name == "val2") {
            Coloring c = valuation_coloring(n, p, false);
            r = c.r();
            a = c.assign();
        } else {
            throw InputError("coloring rule: expected mod, random or val2");
        }
    }
    r = std::max(r, r_hint);
    Coloring c(n, r, a);
    run.inputs += "coloring " + std::to_string(r);
    for (int x : c.assign()) run.inputs += ' ' + std::to_string(x);
    run.inputs += '\n';
    return c;
}

// Pair-coloring file: "a b color" per line, every pair of [1,n] once.
PairColoring load_pair_coloring(const std::string& file, const std::string& rule, int n) {
    if (n < 2) throw InputError("need --n >= 2");
    PairColoring c;
    if (!file.empty()) {
        std::istringstream in(slurp(file));
        std::map<std::pair<int, int>, int> col;
        int r = 1;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            auto t = split(line, " \t\r");
            if (t.empty()) continue;
            auto err = [&](const std::string& what) { return InputError(file + ":" + std::to_string(lineno) + ": " + what); };
            if (t.size() != 3) throw err("expected 'a b color'");
            i64 a = to_i64(t[0]), b = to_i64(t[1]), k = to_i64(t[2]);
            if (a == b || a < 1 || b < 1 || a > n || b > n) throw err("bad pair");
            if (k < 1) throw err("colors start at 1");
            if (!col.emplace(std::minmax<int>(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(k)).second) throw err("pair repeated");
            r = std::max(r, static_cast<int>(k));
        }
        c = PairColoring::from_rule(n, 2, r, [&](std::span<const int> s) {
            auto it = col.find({s[0], s[1]});
            if (it == col.end()) throw InputError(file + ": pair " + std::to_string(s[0]) + " " + std::to_string(s[1]) + " missing");
            return it->second;
        });
    } else {
        if (rule.empty()) throw InputError("need --coloring FILE or --rule NAME:PARAM");
        auto [name, p] = rule_arg(rule);
        std::mt19937_64 rng(run.seed);
        if (name == "random")
            c = PairColoring::from_rule(n, 2, p, [&](std::span<const int>) { return static_cast<int>(rng() % static_cast<u64>(p)) + 1; });
        else if (name == "sum")
            c = PairColoring::from_rule(n, 2, p, [&](std::span<const int> s) { return (s[0] + s[1]) % p + 1; });
        else if (name == "diff")
            c = PairColoring::from_rule(n, 2, p, [&](std::span<const int> s) { return (s[1] - s[0]) % p + 1; });
        else
            throw InputError("pair rule: expected random, sum or diff");
    }
    run.inputs += "pairs " + std::to_string(c.r());
    for (int x : c.assign()) run.inputs += ' ' + std::to_string(x);
    run.inputs += '\n';
    return c;
}

FinkColoring fink_rule(const std::string& rule) {
    auto [name, p] = rule_arg(rule);
    u64 seed = run.seed;
    if (name == "maxpos") return [p](const FinkVec& x) { return x.max_pos() % p + 1; };
    if (name == "size") return [p](const FinkVec& x) { return static_cast<int>(x.entries.size()) % p + 1; };
    if (name == "random")
        return [p, seed](const FinkVec& x) {
            // hash of the literal, so colors do not depend on visiting order
            u64 h = std::stoull(fnv1a_hex(x.to_string()), nullptr, 16) ^ seed;
            h ^= h >> 33;
            h *= 0xff51afd7ed558ccdULL;
            h ^= h >> 33;
            return static_cast<int>(h % static_cast<u64>(p)) + 1;
        };
    throw InputError("fink rule: expected maxpos, size or random");
}

std::vector<GroupElem> elems(const GroupModel& m, const std::string& s) {
    std::vector<GroupElem> out;
    for (auto& t : split(s, ";")) out.push_back(parse_elem(m, t));
    return out;
}

Json elem_list(const std::vector<GroupElem>& v) {
    Json j = Json::array();
    for (const auto& g : v) j.push_back(elem_to_string(g));
    return j;
}

Json density_verdict(const DensityPropertyVerdict& d) {
    return Json{{"pass", d.pass},          {"sampled", d.sampled}, {"worst", js::interval(d.worst)},
                {"worst_ratio", js::q(d.worst_ratio)}, {"ambient", js::q(d.ambient)}, {"checked", d.checked}};
}

Json progression_verdict(const BlockProgression& p, const ProgressionVerdict& v) {
    Json blocks = Json::array();
    for (const auto& q : v.block_density) blocks.push_back(js::q(q));
    Json j{{"b", p.b},
           {"t", p.t},
           {"d", p.d},
           {"w", p.w},
           {"nearly_contains", v.nearly_contains},
           {"homogeneous", v.homogeneous},
           {"block_density", blocks},
           {"ambient", js::q(v.ambient)},
           {"min_block", js::q(v.min_block)},
           {"max_block", js::q(v.max_block)},
           {"pass", v.pass}};
    if (v.first_missed_block) j["first_missed_block"] = *v.first_missed_block;
    return j;
}

std::vector<i64> default_blocks(i64 N) {
    std::vector<i64> b;
    for (i64 d : {20, 10, 5}) b.push_back(std::max<i64>(1, N / d));
    return b;
}

// ---------------------------------------------------------------------------
// Command table

struct P {
    std::vector<std::string> files, vecs;
    std::string window, interval, blocks, rule, coloring, mode, eq, family, model, elems, v, N, x, points, h, g, ns,
        strategy, policy, map, pivot, s, eps, delta, rho, r, b, target, shifts, search, residues, density, coef;
    i64 n = 0, k = 0, m = 0, l = 0, t = 0, d = 0, w = 0, j = 0, L = 0, colors = 0, limit = 16, tail = 0, max_n = 200,
        box = 1, dim = 1, K = 8, samples = 64, max_classes = 64, cap = 4096, p = 0, threshold = 1, bound = 0;
    bool psi = false, write = false;
};

std::function<void()> action;

template <class Fn>
CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help, std::shared_ptr<P> p, Fn fn) {
    auto* c = parent->add_subcommand(name, help);
    std::string op = parent->get_name() + "." + name;
    c->callback([p, fn, op] {
        action = [p, fn, op] {
            run.op = op;
            fn(*p);
        };
    });
    return c;
}

std::shared_ptr<P> fresh() { return std::make_shared<P>(); }

void add_set_commands(CLI::App& app) {
    auto* s = app.add_subcommand("set", "Set arithmetic");
    s->require_subcommand(1);
    {
        auto p = fresh();
        auto* c = leaf(s, "combine", "A+B or A-B", p, [](P& o) {
            IntSet a = load_set(o.files.at(0)), b = load_set(o.files.at(1));
            auto mode = o.mode == "difference" ? CombineMode::difference : CombineMode::sum;
            if (o.mode != "sum" && o.mode != "difference") throw InputError("--mode: expected sum or difference");
            IntSet c = combine(a, b, mode);
            run.w["result"] = js::set(c);
            // every member of the result has a representation
            bool ok = true;
            for (i64 z : c.members()) {
                bool hit = false;
                for (i64 x : a.members())
                    if (b.contains(mode == CombineMode::sum ? z - x : x - z)) {
                        hit = true;
                        break;
                    }
                ok = ok && hit;
            }
            run.verified = ok;
        });
        c->add_option("sets", p->files, "Two set files")->required()->expected(2);
        c->add_option("--mode", p->mode, "sum|difference")->default_val("sum");
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "iterate", "k-fold sum or dilation", p, [](P& o) {
            IntSet a = load_set(o.files.at(0));
            if (o.mode != "fold_sum" && o.mode != "dilate") throw InputError("--mode: expected fold_sum or dilate");
            IntSet c = iterate(a, o.k, o.mode == "dilate" ? IterateMode::dilate : IterateMode::fold_sum);
            run.w["result"] = js::set(c);
        });
        c->add_option("set", p->files)->required()->expected(1);
        c->add_option("--k", p->k)->required();
        c->add_option("--mode", p->mode, "fold_sum|dilate")->default_val("fold_sum");
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "density", "Relative density on an interval", p, [](P& o) {
            IntSet a = load_set(o.files.at(0));
            Interval I = o.interval.empty() ? a.window() : window_arg(o.interval);
            run.w["interval"] = js::interval(I);
            run.w["density"] = js::q(rel_density(a, I));
            run.w["count"] = a.count_in(I);
        });
        c->add_option("set", p->files)->required()->expected(1);
        c->add_option("--interval", p->interval, "N or lo:hi");
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "dset", "Differences realised at least threshold times", p, [](P& o) {
            IntSet a = load_set(o.files.at(0));
            run.w["result"] = js::set(dset(a, o.threshold));
        });
        c->add_option("set", p->files)->required()->expected(1);
        c->add_option("--threshold", p->threshold)->default_val(1);
    }
}

void add_density_commands(CLI::App& app) {
    auto* s = app.add_subcommand("density", "Densities");
    s->require_subcommand(1);
    {
        auto p = fresh();
        auto* c = leaf(s, "report", "Prefix densities on [1,N] and a Banach estimate", p, [](P& o) {
            IntSet a = load_set(o.files.at(0));
            i64 N = o.window.empty() ? a.window().hi : window_arg(o.window).hi;
            if (N < 1) throw InputError("--window: N must be >= 1");
            a = a.restricted(Interval(1, N));
            auto blocks = o.blocks.empty() ? default_blocks(N) : ints(o.blocks);
            auto pre = prefix_densities(a, N, o.tail > 0 ? std::optional<i64>(o.tail) : std::nullopt);
            auto ban = banach_estimate(a, blocks, Interval(1, N));
            run.w["N"] = N;
            run.w["upper"] = js::q(pre.upper);
            run.w["lower"] = js::q(pre.lower);
            run.w["shnirelman"] = js::q(pre.shnirelman);
            run.w["tail_start"] = pre.tail_start;
            run.w["blocks"] = blocks;
            run.w["banach_estimate"] = js::q(ban.banach_estimate);
            run.w["banach_n"] = ban.banach_n;
            if (ban.banach_block) run.w["banach_block"] = js::interval(*ban.banach_block);
            // the witness block carries the claimed density
            run.verified = ban.banach_block && Rational(a.count_in(*ban.banach_block), ban.banach_block->length()) == ban.banach_estimate;
        });
        c->add_option("set", p->files)->required()->expected(1);
        c->add_option("--window", p->window, "N (prefix [1,N]) or lo:hi (hi is used)");
        c->add_option("--blocks", p->blocks, "Block lengths n1,n2,...");
        c->add_option("--tail", p->tail, "Start of the lower-density tail");
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "block", "Densest length-n block", p, [](P& o) {
            IntSet a = load_set(o.files.at(0));
            Interval S = o.search.empty() ? a.window() : window_arg(o.search);
            auto b = block_max(a, o.n, S);
            run.w["n"] = o.n;
            run.w["value"] = js::q(b.value);
            run.w["count"] = b.count;
            run.w["witness"] = js::interval(b.witness);
            run.verified = a.count_in(b.witness) == b.count && b.witness.length() == o.n;
        });
        c->add_option("set", p->files)->required()->expected(1);
        c->add_option("--n", p->n)->required();
        c->add_option("--search", p->search, "N or lo:hi");
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "mann", "Mann or Banach-Mann inequality", p, [](P& o) {
            IntSet a = load_set(o.files.at(0)), b = load_set(o.files.at(1));
            if (o.mode != "mann" && o.mode != "banach_mann") throw InputError("--variant: expected mann or banach_mann");
            auto v = mann_check(a, b, o.n, o.mode == "mann" ? MannVariant::mann : MannVariant::banach_mann,
                                o.blocks.empty() ? std::vector<i64>{} : ints(o.blocks));
            run.w["variant"] = o.mode;
            run.w["pass"] = v.pass;
            run.w["empirical"] = v.empirical;
            run.w["lhs"] = js::q(v.lhs);
            run.w["rhs"] = js::q(v.rhs);
            if (v.first_violation) run.w["first_violation"] = *v.first_violation;
        });
        c->add_option("sets", p->files)->required()->expected(2);
        c->add_option("--N", p->n)->required();
        c->add_option("--variant", p->mode)->default_val("mann");
        c->add_option("--blocks", p->blocks);
    }
}

void add_structure_commands(CLI::App& app) {
    auto* s = app.add_subcommand("structure", "Thick, syndetic and embedding structure");
    s->require_subcommand(1);
    {
        auto p = fresh();
        auto* c = leaf(s, "report", "Longest run, largest gap, piecewise-syndetic data", p, [](P& o) {
            IntSet a = load_set(o.files.at(0));
            Interval I = o.interval.empty() ? a.window() : window_arg(o.interval);
            auto r = structure_report(a, I);
            run.w["interval"] = js::interval(I);
            run.w["longest_run"] = r.longest_run;
            run.w["max_gap"] = r.max_gap;
            if (r.pws_k) run.w["pws_k"] = *r.pws_k;
            if (r.pws_interval) run.w["pws_interval"] = js::interval(*r.pws_interval);
            run.verified = longest_run(a, I) == r.longest_run;
        });
        c->add_option("set", p->files)->required()->expected(1);
        c->add_option("--interval", p->interval);
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "pws", "Bounded gaps on a long interval", p, [](P& o) {
            IntSet a = load_set(o.files.at(0));
            Interval I = o.interval.empty() ? a.window() : window_arg(o.interval);
            auto r = pws_witness(a, o.L, I);
            run.w["found"] = r.has_value();
            if (r) {
                run.w["k"] = r->first;
                run.w["witness"] = js::interval(r->second);
                run.verified = r->second.length() >= o.L && gap_on(a, r->second) <= r->first;
            }
        });
        c->add_option("set", p->files)->required()->expected(1);
        c->add_option("--L", p->L)->required();
        c->add_option("--interval", p->interval);
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "embed", "Shift t with F + t inside Y", p, [](P& o) {
            IntSet f = load_set(o.files.at(0)), y = load_set(o.files.at(1));
            Interval sh = window_arg(o.shifts);
            auto t = finite_embed(f, y, sh);
            run.w["found"] = t.has_value();
            if (t) {
                run.w["t"] = *t;
                run.verified = std::all_of(f.members().begin(), f.members().end(), [&](i64 x) { return y.contains(x + *t); });
            }
        });
        c->add_option("sets", p->files)->required()->expected(2);
        c->add_option("--shifts", p->shifts, "lo:hi")->required();
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "diffcover", "F with target inside (E-E)+F", p, [](P& o) {
            IntSet e = load_set(o.files.at(0));
            Interval T = window_arg(o.target);
            IntSet f = diff_cover(e, T);
            run.w["target"] = js::interval(T);
            run.w["F"] = f.members();
            run.w["size"] = f.size();
            run.verified = verify_diff_cover(e, T, f);
        });
        c->add_option("set", p->files)->required()->expected(1);
        c->add_option("--target", p->target, "lo:hi")->required();
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "jincover", "Finite F with (A+B)+F containing a long interval", p, [](P& o) {
            IntSet a = load_set(o.files.at(0)), b = load_set(o.files.at(1));
            auto j = jin_cover(a, b, o.L);
            run.w["F"] = j.F.members();
            run.w["interval"] = js::interval(j.interval);
            run.w["certified"] = js::interval(j.certified);
            run.w["alpha"] = js::q(j.alpha);
            run.w["beta"] = js::q(j.beta);
            run.w["shift"] = j.k;
            run.w["overlap"] = j.overlap;
            run.w["bound"] = j.bound;
            run.w["thick_ok"] = j.thick_ok;
            run.verified = verify_jin_cover(a, b, j);
        });
        c->add_option("sets", p->files)->required()->expected(2);
        c->add_option("--L", p->L)->required();
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "nathanson", "B + C inside A with |C| = n", p, [](P& o) {
            IntSet a = load_set(o.files.at(0));
            auto r = nathanson_find(a, o.n, o.search.empty() ? std::nullopt : std::optional<Interval>(window_arg(o.search)));
            run.w["found"] = r.has_value();
            if (r) {
                run.w["B"] = r->B.members();
                run.w["C"] = r->C.members();
                run.w["steps"] = r->steps;
                bool ok = !r->B.empty();
                for (i64 x : r->B.members())
                    for (i64 y : r->C.members()) ok = ok && a.contains(x + y);
                run.verified = ok;
            }
        });
        c->add_option("set", p->files)->required()->expected(1);
        c->add_option("--n", p->n)->required();
        c->add_option("--search", p->search);
    }
}

void add_ramsey_commands(CLI::App& app) {
    auto* s = app.add_subcommand("ramsey", "Monochromatic configurations");
    s->require_subcommand(1);
    {
        auto p = fresh();
        auto* c = leaf(s, "arrow", "Decide l -> (n)^m_k", p, [](P& o) {
            auto r = arrow_check(static_cast<int>(o.l), static_cast<int>(o.n), static_cast<int>(o.m), static_cast<int>(o.k), run.budget);
            status(r.status);
            run.w["arrow"] = r.status == SearchStatus::exhausted;
            run.w["nodes"] = r.nodes;
            if (r.coloring) {
                run.w["coloring"] = r.coloring->assign();
                run.verified = !find_homogeneous(*r.coloring, static_cast<int>(o.n));
            }
        });
        c->add_option("--l", p->l)->required();
        c->add_option("--n", p->n)->required();
        c->add_option("--m", p->m)->default_val(2);
        c->add_option("--k", p->k)->default_val(2);
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "vdw", "S(m,k,r,n): search a coloring or decide", p, [](P& o) {
            int m = static_cast<int>(o.m), k = static_cast<int>(o.k);
            run.w["m"] = m;
            run.w["k"] = k;
            if (!o.coloring.empty() || !o.rule.empty()) {
                Coloring col = load_coloring(o.coloring, o.rule, o.n);
                auto cert = vdw_find_S(m, k, col);
                status(cert ? SearchStatus::found : SearchStatus::exhausted);
                if (cert) {
                    run.w["a"] = cert->a;
                    run.w["d"] = cert->d;
                    run.w["recheck"] = verify_s_certificate(m, k, col, *cert);
                    run.verified = run.w["recheck"].get<bool>();
                }
                return;
            }
            auto r = vdw_decide_S(m, k, static_cast<int>(o.colors), o.n, run.budget);
            status(r.status);
            run.w["n"] = o.n;
            run.w["r"] = o.colors;
            run.w["holds"] = r.holds;
            run.w["nodes"] = r.nodes;
            if (r.counterexample) {
                run.w["counterexample"] = r.counterexample->assign();
                run.w["recheck"] = !vdw_find_S(m, k, *r.counterexample).has_value();
                run.verified = run.w["recheck"].get<bool>();
            }
        });
        c->add_option("--m", p->m)->default_val(1);
        c->add_option("--k", p->k)->default_val(2);
        c->add_option("--colors", p->colors)->default_val(2);
        c->add_option("--n", p->n);
        c->add_option("--coloring", p->coloring, "Coloring file");
        c->add_option("--rule", p->rule, "mod:r | random:r | val2:L");
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "number", "Least n forcing the configuration", p, [](P& o) {
            int r = static_cast<int>(o.colors);
            Family f;
            if (o.family == "schur") f = Family::schur(r);
            else if (o.family == "vdw") f = Family::vdw(static_cast<int>(o.k), r);
            else if (o.family == "folkman") f = Family::folkman(static_cast<int>(o.m), r);
            else if (o.family == "hj" || o.family == "hales_jewett") f = Family::hales_jewett(static_cast<int>(o.L), r);
            else if (o.family == "rado") f = Family::rado(parse_equation(o.eq), r);
            else throw InputError("--family: expected schur, vdw, folkman, hj or rado");
            auto res = number_search(f, run.budget, o.max_n);
            status(res.status);
            run.w["family"] = f.name();
            run.w["lower"] = res.lower;
            run.w["nodes"] = res.nodes;
            if (res.status == SearchStatus::found) run.w["n"] = res.value;
            if (res.extremal) {
                run.w["extremal"] = *res.extremal;
                run.verified = !family_has_configuration(f, res.lower - 1, *res.extremal);
            }
        });
        c->add_option("--family", p->family, "schur|vdw|folkman|hj|rado")->required();
        c->add_option("--colors", p->colors)->default_val(2);
        c->add_option("--k", p->k, "Progression length (vdw)")->default_val(3);
        c->add_option("--m", p->m, "Set size (folkman)")->default_val(2);
        c->add_option("--alphabet", p->L, "Alphabet size (hj)")->default_val(2);
        c->add_option("--eq", p->eq, "Equation (rado)");
        c->add_option("--max-n", p->max_n)->default_val(200);
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "hj", "Monochromatic combinatorial subspace", p, [](P& o) {
            int L = static_cast<int>(o.L), n = static_cast<int>(o.n), m = static_cast<int>(o.m);
            Coloring col = load_coloring(o.coloring, o.rule, word_count(L, n));
            auto w = hj_line_search(L, n, m, col);
            status(w ? SearchStatus::found : SearchStatus::exhausted);
            if (w) {
                run.w["word"] = w->to_string();
                auto inst = w->instances();
                run.w["color"] = col(inst[0] + 1);
                run.verified = w->valid() && std::all_of(inst.begin(), inst.end(), [&](i64 x) { return col(x + 1) == col(inst[0] + 1); });
            }
        });
        c->add_option("--alphabet", p->L)->default_val(2);
        c->add_option("--n", p->n)->required();
        c->add_option("--m", p->m)->default_val(1);
        c->add_option("--coloring", p->coloring);
        c->add_option("--rule", p->rule);
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "gallai", "Monochromatic homothetic copy a + sF in a box", p, [](P& o) {
            std::vector<Point> F;
            for (auto& t : split(o.points, ";")) F.push_back(ints(t));
            BoxColoring bc;
            bc.d = static_cast<int>(o.dim);
            bc.n = o.box;
            bc.c = load_coloring(o.coloring, o.rule, BoxColoring::size(bc.d, bc.n));
            auto hit = gallai_find(F, bc, o.psi);
            status(hit ? SearchStatus::found : SearchStatus::exhausted);
            if (hit) {
                run.w["a"] = hit->a;
                run.w["scale"] = hit->scale;
                run.w["via"] = hit->via;
                run.verified = verify_gallai(F, bc, *hit);
            }
        });
        c->add_option("--points", p->points, "F as 'x,y;x,y;...'")->required();
        c->add_option("--dim", p->dim)->default_val(1);
        c->add_option("--box", p->box, "Box [-n,n]^d")->default_val(1);
        c->add_option("--coloring", p->coloring);
        c->add_option("--rule", p->rule);
        c->add_flag("--psi", p->psi, "Route through the Hales-Jewett encoding");
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "check-fs", "Is FS(x) (m=1) or the pair-sum set (m=2) monochromatic", p, [](P& o) {
            auto x = ints(o.x);
            FsVerdict v;
            if (o.m == 2) {
                i64 total = 0;
                for (i64 y : x) total += y;
                v = mt_check(x, load_pair_coloring(o.coloring, o.rule, static_cast<int>(o.n > 0 ? o.n : total)));
            } else {
                i64 total = 0;
                for (i64 y : x) total += y;
                v = fs_check(x, load_coloring(o.coloring, o.rule, o.n > 0 ? o.n : total));
            }
            run.w["pass"] = v.pass;
            run.w["color"] = v.color;
            run.w["checked"] = v.checked;
            run.w["out_of_domain"] = v.out_of_domain.size();
            if (v.first_violation) {
                auto item = [](const FsItem& f) { return Json{{"indices", f.indices}, {"sum", f.sum}, {"sum2", f.sum2}}; };
                run.w["first_violation"] = Json::array({item(v.first_violation->first), item(v.first_violation->second)});
            }
        });
        c->add_option("--x", p->x, "Sequence x_1,x_2,...")->required();
        c->add_option("--m", p->m)->default_val(1);
        c->add_option("--n", p->n, "Coloring domain (default: sum of x)");
        c->add_option("--coloring", p->coloring);
        c->add_option("--rule", p->rule);
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "qschur", "Quantitative Schur report", p, [](P& o) {
            Coloring col = load_coloring(o.coloring, o.rule, o.n);
            auto r = quantitative_schur(col, rat(o.eps), o.window.empty() ? std::nullopt : std::optional<Interval>(window_arg(o.window)));
            Json cs = Json::array();
            for (const auto& x : r.colors)
                cs.push_back(Json{{"color", x.color},
                                  {"density", js::q(x.density)},
                                  {"threshold", js::q(x.threshold)},
                                  {"r_size", x.r_size},
                                  {"r_density", js::q(x.r_density)},
                                  {"r_sample", x.r_sample}});
            run.w["colors"] = cs;
            run.w["best_color"] = r.best_color;
            run.w["window"] = js::interval(r.window);
            run.w["candidates"] = js::interval(r.candidates);
        });
        c->add_option("--eps", p->eps)->required();
        c->add_option("--n", p->n);
        c->add_option("--window", p->window);
        c->add_option("--coloring", p->coloring);
        c->add_option("--rule", p->rule);
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "paths", "Partition [1,n] into color-constant paths", p, [](P& o) {
            PivotPolicy pol = PivotPolicy::max_degree_balance;
            if (o.pivot == "fixed_last") pol = PivotPolicy::fixed_last;
            else if (o.pivot == "sequential") pol = PivotPolicy::sequential;
            else if (o.pivot != "max_degree_balance") throw InputError("--pivot: expected max_degree_balance, fixed_last or sequential");
            auto col = load_pair_coloring(o.coloring, o.rule, static_cast<int>(o.n));
            auto r = rado_paths(col, pol, run.budget);
            status(r.status);
            run.w["method"] = r.method;
            run.w["pivot"] = r.pivot;
            run.w["nodes"] = r.nodes;
            if (r.status == SearchStatus::found) {
                run.w["paths"] = r.paths;
                run.verified = verify_paths(col, r.paths);
            }
        });
        c->add_option("--n", p->n)->required();
        c->add_option("--pivot", p->pivot)->default_val("max_degree_balance");
        c->add_option("--coloring", p->coloring, "Lines 'a b color'");
        c->add_option("--rule", p->rule, "random:r | sum:r | diff:r");
    }
}

void add_rado_commands(CLI::App& app) {
    auto* s = app.add_subcommand("rado", "Partition regularity");
    s->require_subcommand(1);
    {
        auto p = fresh();
        auto* c = leaf(s, "witness", "Witness polynomials for coefficients summing to 0", p, [](P& o) {
            auto w = rado_witness(ints(o.coef));
            run.w["coef"] = w.coef;
            run.w["a"] = w.a;
            Json ps = Json::array();
            for (const auto& q : w.polys) ps.push_back(Json{{"coef", q}, {"text", poly_to_string(q)}});
            run.w["polys"] = ps;
            run.verified = verify_witness(w);
        });
        c->add_option("--coef", p->coef, "c_1,...,c_k")->required();
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "normal", "Normal form of an integer string", p, [](P& o) {
            auto s = ints(o.x);
            run.w["input"] = s;
            run.w["normal_form"] = u_normal_form(s);
        });
        c->add_option("--string", p->x, "s_1,s_2,...")->required();
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "solve", "Monochromatic solutions under a coloring", p, [](P& o) {
            DioEquation eq = parse_equation(o.eq);
            Coloring col = load_coloring(o.coloring, o.rule, o.n);
            auto sols = mono_solutions(eq, col, static_cast<std::size_t>(o.limit));
            run.w["equation"] = eq.to_string();
            run.w["solutions"] = sols;
            run.w["count"] = sols.size();
            bool ok = true;
            for (const auto& x : sols) {
                ok = ok && eq.evaluate(x) == 0 && eq.admissible(x);
                for (i64 y : x) ok = ok && col(y) == col(x[0]);
            }
            run.verified = ok;
        });
        c->add_option("--eq", p->eq, "'1 1 -1', 'sum 2 prod 3', '1^1 1^1 -1^2'")->required();
        c->add_option("--n", p->n);
        c->add_option("--limit", p->limit)->default_val(16);
        c->add_option("--coloring", p->coloring);
        c->add_option("--rule", p->rule);
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "nonpr", "Coloring of [1,N] with no monochromatic solution", p, [](P& o) {
            DioEquation eq = parse_equation(o.eq);
            int r = static_cast<int>(o.colors);
            NonPrResult res;
            if (o.family == "sweep") {
                res = nonpr_sweep(eq, o.n, r, run.budget);
            } else {
                NonPrFamily fam;
                if (o.family == "backtracking") {
                    fam.kind = NonPrFamily::Kind::backtracking;
                } else {
                    auto [name, L] = rule_arg(o.family);
                    if (name == "valuation") fam.kind = NonPrFamily::Kind::valuation;
                    else if (name == "parity") fam.kind = NonPrFamily::Kind::valuation_plus_parity;
                    else throw InputError("--family: expected valuation:L, parity:L, backtracking or sweep");
                    fam.L = L;
                }
                res = nonpr_coloring_search(eq, o.n, r, fam, run.budget);
            }
            status(res.status);
            run.w["equation"] = eq.to_string();
            run.w["family"] = res.family;
            run.w["tried"] = res.tried;
            run.w["nodes"] = res.nodes;
            if (res.coloring) {
                run.w["coloring"] = res.coloring->assign();
                run.verified = mono_solutions(eq, *res.coloring, 1).empty();
            }
        });
        c->add_option("--eq", p->eq)->required();
        c->add_option("--N", p->n)->required();
        c->add_option("--colors", p->colors)->default_val(2);
        c->add_option("--family", p->family, "valuation:L | parity:L | backtracking | sweep")->default_val("sweep");
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "sierpinski", "All solutions of a_1/x_1 + ... + a_n/x_n = b", p, [](P& o) {
            auto a = ints(o.coef);
            Rational b = rat(o.b);
            auto r = unit_fraction_solutions(a, b, o.bound);
            run.w["solutions"] = r.solutions;
            run.w["count"] = r.solutions.size();
            run.w["stabilized"] = r.stabilized;
            bool ok = true;
            for (const auto& x : r.solutions) {
                Rational sum(0);
                for (std::size_t i = 0; i < x.size(); ++i) sum += Rational(a[i], x[i]);
                ok = ok && sum == b;
            }
            run.verified = ok;
        });
        c->add_option("--a", p->coef, "Numerators a_1,...,a_n")->required();
        c->add_option("--b", p->b)->required();
        c->add_option("--bound", p->bound)->required();
    }
}

void add_fink_commands(CLI::App& app) {
    auto* s = app.add_subcommand("fink", "FIN_k block sequences");
    s->require_subcommand(1);
    {
        auto p = fresh();
        auto* c = leaf(s, "tetris", "Apply a regressive map (default: tetris)", p, [](P& o) {
            FinkVec b = parse_finkvec(o.v);
            int k = o.k > 0 ? static_cast<int>(o.k) : std::max(b.k, 1);
            RegressiveMap f = o.map.empty() ? RegressiveMap::tetris(k) : [&] {
                std::vector<int> t;
                for (i64 x : ints(o.map)) t.push_back(static_cast<int>(x));
                return RegressiveMap(t);
            }();
            FinkVec r = regressive_apply(f, b);
            run.w["map"] = f.table;
            run.w["input"] = b.to_string();
            run.w["result"] = r.to_string();
            run.w["zero"] = r.is_zero();
        });
        c->add_option("--vec", p->v, "pos:val,pos:val")->required();
        c->add_option("--k", p->k);
        c->add_option("--map", p->map, "f(0),...,f(k)");
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "combine", "Sum of blocks with increasing supports", p, [](P& o) {
            std::vector<FinkVec> xs;
            for (auto& v : o.vecs) xs.push_back(parse_finkvec(v));
            run.w["result"] = block_combine(xs).to_string();
        });
        c->add_option("--vec", p->vecs, "Repeat for each block")->required();
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "gowers", "Block sequence with monochromatic combinations", p, [](P& o) {
            auto col = fink_rule(o.rule);
            int k = static_cast<int>(o.k);
            auto r = gowers_search(k, static_cast<int>(o.n), static_cast<int>(o.l), col, run.budget);
            status(r.status);
            run.w["nodes"] = r.nodes;
            if (r.status == SearchStatus::found) {
                Json bs = Json::array();
                for (const auto& b : r.blocks) bs.push_back(b.to_string());
                run.w["blocks"] = bs;
                run.w["color"] = r.color;
                bool ok = true;
                for_each_gowers_combination(r.blocks, k, [&](const FinkVec& x) {
                    ok = ok && col(x) == r.color;
                    return ok;
                });
                run.verified = ok;
            }
        });
        c->add_option("--k", p->k)->default_val(1);
        c->add_option("--n", p->n)->required();
        c->add_option("--l", p->l)->default_val(2);
        c->add_option("--rule", p->rule, "maxpos:r | size:r | random:r")->required();
    }
}

void add_leth_commands(CLI::App& app) {
    auto* s = app.add_subcommand("leth", "Block progressions and gap structure");
    s->require_subcommand(1);
    {
        auto p = fresh();
        auto* c = leaf(s, "gaps", "Gap ratio, optionally resolution coverage", p, [](P& o) {
            IntSet a = load_set(o.files.at(0));
            Interval I = o.interval.empty() ? a.window() : window_arg(o.interval);
            run.w["interval"] = js::interval(I);
            run.w["longest_free_run"] = longest_free_run(a, I);
            run.w["gap_ratio"] = js::q(gap_ratio(a, I));
            if (!o.rho.empty()) run.w["coverage"] = js::q(resolution_coverage(a, I, rat(o.rho)));
        });
        c->add_option("set", p->files)->required()->expected(1);
        c->add_option("--interval", p->interval);
        c->add_option("--rho", p->rho);
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "check", "Near containment and homogeneity of B(b,t,d,w)", p, [](P& o) {
            IntSet a = load_set(o.files.at(0));
            BlockProgression bp(to_i64(o.b), o.t, o.d, o.w);
            std::optional<Rational> sv;
            if (!o.s.empty()) sv = rat(o.s);
            std::optional<Interval> I;
            if (!o.interval.empty()) I = window_arg(o.interval);
            auto v = progression_check(a, bp, sv, I);
            run.w["verdict"] = progression_verdict(bp, v);
            // every block met, by direct lookup
            bool hit = true;
            for (i64 i = 0; i < bp.t; ++i) hit = hit && a.count_in(bp.block(i)) > 0;
            run.verified = hit == v.nearly_contains;
        });
        c->add_option("set", p->files)->required()->expected(1);
        c->add_option("--b", p->b)->required();
        c->add_option("--t", p->t)->required();
        c->add_option("--d", p->d)->required();
        c->add_option("--w", p->w)->default_val(0);
        c->add_option("--s", p->s, "Homogeneity tolerance");
        c->add_option("--interval", p->interval, "Ambient interval for s");
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "density-prop", "(m,r)-density property on I", p, [](P& o) {
            IntSet a = load_set(o.files.at(0));
            Interval I = o.interval.empty() ? a.window() : window_arg(o.interval);
            auto v = density_property(a, I, o.m, rat(o.r));
            run.w = density_verdict(v);
            run.verified = I.contains(v.worst) && rel_density(a, v.worst) == v.worst_ratio * v.ambient;
        });
        c->add_option("set", p->files)->required()->expected(1);
        c->add_option("--interval", p->interval);
        c->add_option("--m", p->m)->required();
        c->add_option("--r", p->r)->required();
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "search", "Homogeneous (t,d,w)-progression with parameter certificate", p, [](P& o) {
            IntSet a = load_set(o.files.at(0));
            auto f = leth_functions(o.h, o.g);
            Rational sv = rat(o.s);
            std::optional<Rational> r;
            if (!o.r.empty()) r = rat(o.r);
            auto cert = progression_search(a, o.n, o.t, sv, o.j, f, o.m, r);
            status(cert ? SearchStatus::found : SearchStatus::exhausted);
            run.w["h"] = f.h_name;
            run.w["g"] = f.g_name;
            if (cert) {
                run.w["progression"] = progression_verdict(cert->p, cert->verdict);
                run.w["d_over_n"] = js::q(cert->d_over_n);
                run.w["w_over_d"] = js::q(cert->w_over_d);
                run.w["h_value"] = js::q(cert->h_value);
                run.w["inv_g"] = cert->inv_g;
                run.w["inv_j"] = js::q(cert->inv_j);
                run.w["checked"] = cert->checked;
                if (cert->density) run.w["density_property"] = density_verdict(*cert->density);
                run.verified = verify_leth(a, o.n, o.t, sv, o.j, f, o.m, *cert);
            }
        });
        c->add_option("set", p->files)->required()->expected(1);
        c->add_option("--n", p->n)->required();
        c->add_option("--t", p->t)->required();
        c->add_option("--s", p->s)->required();
        c->add_option("--j", p->j)->default_val(2);
        c->add_option("--m", p->m)->required();
        c->set_help_flag("--help", "Print this help message and exit");
        c->add_option("--h", p->h, "x | x^2 | t1:v1,t2:v2,...")->default_val("x");
        c->add_option("--g", p->g, "x | x^2 | log2")->default_val("x");
        c->add_option("--r", p->r, "Also evaluate the (m,r)-density property");
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "sim", "SIM profile F(n); 0 = no interval, -1 = unbounded", p, [](P& o) {
            IntSet a = load_set(o.files.at(0));
            std::optional<Interval> W;
            if (!o.window.empty()) W = window_arg(o.window);
            auto prof = sim_profile(a, rat(o.delta), rat(o.eps), ints(o.ns), W);
            run.w["delta"] = js::q(prof.delta);
            run.w["epsilon"] = js::q(prof.epsilon);
            run.w["window"] = js::interval(prof.window);
            Json vs = Json::array();
            for (auto [n, F] : prof.values) vs.push_back(Json::array({n, F}));
            run.w["values"] = vs;
            run.w["monotone"] = prof.monotone();
        });
        c->add_option("set", p->files)->required()->expected(1);
        c->add_option("--delta", p->delta)->required();
        c->add_option("--eps", p->eps)->required();
        c->add_option("--ns", p->ns, "n_1,n_2,...")->required();
        c->add_option("--window", p->window);
    }
}

void add_graph_commands(CLI::App& app) {
    auto* s = app.add_subcommand("graph", "Triangles and regularity");
    s->require_subcommand(1);
    {
        auto p = fresh();
        auto* c = leaf(s, "stats", "Edge and triangle densities", p, [](P& o) {
            auto g = load_graph(o.files.at(0));
            auto st = graph_stats(g);
            run.w["n"] = g.n();
            run.w["edges"] = st.edges;
            run.w["triangles"] = st.triangles;
            run.w["e"] = js::q(st.e);
            run.w["t"] = js::q(st.t);
            Json ts = Json::array();
            for (auto& t : list_triangles(g, static_cast<std::size_t>(o.limit))) ts.push_back(t);
            run.w["triangle_sample"] = ts;
        });
        c->add_option("graph", p->files)->required()->expected(1);
        c->add_option("--limit", p->limit, "Triangles listed")->default_val(16);
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "roth", "Roth coding graph of A inside [1,n]", p, [](P& o) {
            IntSet a = load_set(o.files.at(0));
            i64 n = o.n > 0 ? o.n : a.window().hi;
            auto r = roth_graph(a, n);
            run.w["n"] = n;
            run.w["vertices"] = r.g.n();
            run.w["edges"] = r.g.edge_count();
            run.w["triangles"] = r.triangles;
            run.w["trivial"] = r.trivial.size();
            run.w["nontrivial"] = r.nontrivial;
            Json aps = Json::array();
            bool ok = true;
            for (auto& t : roth_nontrivial(r, static_cast<std::size_t>(o.limit))) {
                auto [x, y, z] = roth_progression(r, t);
                aps.push_back(Json{{"triangle", t}, {"progression", {x, y, z}}});
                ok = ok && x != z && x + z == 2 * y && a.contains(x) && a.contains(y) && a.contains(z);
            }
            run.w["progressions"] = aps;
            run.verified = ok;
            if (o.write) {
                std::ostringstream os;
                write_graph(os, r.g);
                run.raw = os.str();
            }
        });
        c->add_option("set", p->files)->required()->expected(1);
        c->add_option("--n", p->n);
        c->add_option("--limit", p->limit)->default_val(16);
        c->add_flag("--emit-graph", p->write, "Print the graph file instead of the report (text mode)");
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "remove", "Remove edges until triangle-free", p, [](P& o) {
            auto g = load_graph(o.files.at(0));
            if (o.strategy != "greedy_cover" && o.strategy != "exhaustive") throw InputError("--strategy: expected greedy_cover or exhaustive");
            auto r = triangle_removal(g, o.strategy == "exhaustive" ? RemovalStrategy::exhaustive : RemovalStrategy::greedy_cover);
            run.w["strategy"] = to_string(r.strategy);
            run.w["removed"] = r.removed;
            run.w["removed_count"] = r.removed.size();
            run.w["removed_density"] = js::q(r.removed_density);
            run.w["triangle_free"] = r.triangle_free;
            SimpleGraph h = g;
            for (auto [u, v] : r.removed) h.remove_edge(u, v);
            run.verified = triangle_count(h) == 0;
        });
        c->add_option("graph", p->files)->required()->expected(1);
        c->add_option("--strategy", p->strategy)->default_val("greedy_cover");
    }
    auto policy = [](const P& o) {
        if (o.policy == "exhaustive") return WitnessPolicy::exhaustive();
        if (o.policy == "heuristic") return WitnessPolicy::heuristic(static_cast<int>(o.samples), run.seed);
        throw InputError("--policy: expected exhaustive or heuristic");
    };
    {
        auto p = fresh();
        auto* c = leaf(s, "pseudo", "Is (X,Y) epsilon-pseudorandom", p, [policy](P& o) {
            auto g = load_graph(o.files.at(0));
            auto v = pseudorandom_check(g, vertex_list(o.v), vertex_list(o.x), rat(o.eps), policy(o));
            run.w["pass"] = v.pass;
            run.w["heuristic"] = v.heuristic;
            run.w["certified"] = v.certified;
            run.w["density"] = js::q(v.density);
            run.w["checked"] = v.checked;
            if (!v.pass) {
                run.w["witness_a"] = v.wa;
                run.w["witness_b"] = v.wb;
                run.w["witness_density"] = js::q(v.witness_density);
                run.w["deviation"] = js::q(v.deviation);
                // recount the witness pair
                i64 e = 0, slots = 0;
                for (int a : v.wa)
                    for (int b : v.wb)
                        if (a != b) {
                            ++slots;
                            e += g.has_edge(a, b);
                        }
                Rational d = slots ? Rational(e, slots) : Rational(0);
                run.verified = d == v.witness_density && abs(d - v.density) == v.deviation && v.deviation > rat(o.eps);
            } else {
                run.verified = v.certified;
            }
        });
        c->add_option("graph", p->files)->required()->expected(1);
        c->add_option("--X", p->v, "Vertices, e.g. 1-10,15")->required();
        c->add_option("--Y", p->x)->required();
        c->add_option("--eps", p->eps)->required();
        c->add_option("--policy", p->policy)->default_val("heuristic");
        c->add_option("--samples", p->samples)->default_val(64);
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "regular", "Epsilon-regular partition by energy refinement", p, [policy](P& o) {
            auto g = load_graph(o.files.at(0));
            auto r = regular_partition(g, rat(o.eps), static_cast<int>(o.max_classes), policy(o));
            run.w["classes"] = r.classes;
            run.w["class_count"] = r.classes.size();
            Json rp = Json::array();
            for (auto [i, j] : r.regular_pairs) rp.push_back(Json::array({i, j}));
            run.w["regular_pairs"] = rp;
            run.w["mass"] = js::q(r.mass);
            run.w["energy"] = r.energy;
            run.w["rounds"] = r.rounds;
            run.w["satisfied"] = r.satisfied;
            run.w["certified"] = r.certified;
            run.w["max_classes_hit"] = r.max_classes_hit;
            // the classes partition V and the mass matches the listed pairs
            std::vector<int> seen(static_cast<std::size_t>(g.n()) + 1, 0);
            bool ok = true;
            for (auto& cl : r.classes)
                for (int v : cl) ok = ok && v >= 1 && v <= g.n() && !seen[v]++;
            i64 mass = 0;
            for (auto [i, j] : r.regular_pairs) mass += static_cast<i64>(r.classes[i].size() * r.classes[j].size());
            ok = ok && std::count(seen.begin() + 1, seen.end(), 1) == g.n() && Rational(mass, i64(g.n()) * g.n()) == r.mass;
            run.verified = ok && r.certified;
        });
        c->add_option("graph", p->files)->required()->expected(1);
        c->add_option("--eps", p->eps)->required();
        c->add_option("--max-classes", p->max_classes)->default_val(64);
        c->add_option("--policy", p->policy)->default_val("heuristic");
        c->add_option("--samples", p->samples)->default_val(64);
    }
}

void add_apx_commands(CLI::App& app) {
    auto* s = app.add_subcommand("apx", "Approximate groups");
    s->require_subcommand(1);
    auto generate = [](const P& o, bool ncp) {
        GroupModel m = parse_model(o.model);
        auto v = elems(m, o.v);
        auto N = ints(o.N);
        run.inputs += m.name() + " " + o.v + " " + o.N + "\n";
        return ncp ? ncp_generate(m, v, N) : gap_generate(m, v, N);
    };
    {
        auto p = fresh();
        auto* c = leaf(s, "cover", "Translates of X covering X^2", p, [generate](P& o) {
            GroupSet x;
            if (!o.elems.empty()) {
                GroupModel m = parse_model(o.model);
                x = GroupSet(m, elems(m, o.elems));
            } else {
                x = generate(o, o.family == "ncp");
            }
            if (o.mode != "greedy" && o.mode != "exact") throw InputError("--mode: expected greedy or exact");
            CoverMode mode = o.mode == "exact" ? CoverMode::exact(static_cast<std::size_t>(o.cap)) : CoverMode::greedy();
            auto r = cover_constant(x, static_cast<int>(o.K), mode, run.budget);
            status(r.status);
            run.w["model"] = x.model.name();
            run.w["mode"] = mode.name();
            run.w["m"] = r.m;
            run.w["translates"] = elem_list(r.translates);
            run.w["exceeds"] = r.exceeds;
            run.w["exact"] = r.exact;
            run.w["x_size"] = r.x_size;
            run.w["x2_size"] = r.x2_size;
            run.w["nodes"] = r.nodes;
            run.verified = verify_cover(x, r.translates);
        });
        c->add_option("--model", p->model, "zd:D | znd:N:D | heis")->required();
        c->add_option("--elems", p->elems, "X as 'a,b;c,d;...'");
        c->add_option("--v", p->v, "Generators 'a,b;c,d'");
        c->add_option("--N", p->N, "Bounds N_1,...,N_r");
        c->add_option("--from", p->family, "gap|ncp when X is generated")->default_val("gap");
        c->add_option("--K", p->K)->default_val(8);
        c->add_option("--mode", p->mode)->default_val("greedy");
        c->add_option("--cap", p->cap)->default_val(4096);
    }
    for (bool ncp : {false, true}) {
        auto p = fresh();
        auto* c = leaf(s, ncp ? "ncp" : "gap", ncp ? "Noncommutative progression" : "Symmetric GAP P(v,N)", p, [generate, ncp](P& o) {
            GroupSet x = generate(o, ncp);
            run.w["model"] = x.model.name();
            run.w["size"] = x.size();
            run.w["symmetric"] = x.symmetric();
            run.w["elements"] = elem_list(x.elements);
        });
        c->add_option("--model", p->model)->required();
        c->add_option("--v", p->v)->required();
        c->add_option("--N", p->N)->required();
    }
}

void add_gen_commands(CLI::App& app) {
    auto* s = app.add_subcommand("gen", "Reproducible inputs");
    s->require_subcommand(1);
    auto emit = [](const IntSet& a) {
        run.w["set"] = js::set(a);
        std::ostringstream os;
        write_set(os, a);
        run.raw = os.str();
    };
    {
        auto p = fresh();
        auto* c = leaf(s, "periodic", "Residue classes mod p", p, [emit](P& o) { emit(gen::periodic(o.p, ints(o.residues), window_arg(o.window))); });
        c->add_option("p", p->p)->required();
        c->add_option("residues", p->residues, "r1,r2,...")->required();
        c->add_option("--window", p->window)->default_val("1000");
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "random", "Each point with the given probability", p, [emit](P& o) {
            emit(gen::random(rat(o.density), static_cast<u64>(o.k), window_arg(o.window)));
        });
        c->add_option("density", p->density)->required();
        c->add_option("seed", p->k)->required();
        c->add_option("--window", p->window)->default_val("1000");
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "squares", "Perfect squares", p, [emit](P& o) { emit(gen::squares(window_arg(o.window))); });
        c->add_option("--window", p->window)->default_val("1000");
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "primes", "Primes", p, [emit](P& o) { emit(gen::primes(window_arg(o.window))); });
        c->add_option("--window", p->window)->default_val("1000");
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "blocks", "start:len:period runs, or 'squares' for [k^2, k^2+k]", p, [emit](P& o) {
            Interval W = window_arg(o.window);
            if (o.x == "squares") return emit(gen::square_blocks(W));
            std::vector<i64> v;
            for (auto& t : split(o.x, ":")) v.push_back(to_i64(t));
            if (v.size() != 3) throw InputError("blocks: expected start:len:period or squares");
            emit(gen::blocks(v[0], v[1], v[2], W));
        });
        c->add_option("spec", p->x)->required();
        c->add_option("--window", p->window)->default_val("1000");
    }
    {
        auto p = fresh();
        auto* c = leaf(s, "gnp", "Random graph G(n,p)", p, [](P& o) {
            Rational q = rat(o.density);
            if (q < 0 || q > 1) throw InputError("gnp: p outside [0,1]");
            if (o.n < 1) throw InputError("gnp: n must be >= 1");
            std::mt19937_64 rng(run.seed);
            SimpleGraph g(static_cast<int>(o.n));
            for (int u = 1; u <= g.n(); ++u)
                for (int v = u + 1; v <= g.n(); ++v)
                    if (rng() % static_cast<u64>(q.denominator()) < static_cast<u64>(q.numerator())) g.add_edge(u, v);
            std::ostringstream os;
            write_graph(os, g);
            run.raw = os.str();
            run.w["n"] = g.n();
            run.w["edges"] = g.edges();
        });
        c->add_option("n", p->n)->required();
        c->add_option("p", p->density)->required();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rw: density, Ramsey, regularity and approximate-group workbench"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", run.seed, "Seed for rules and heuristics")->default_val(1);
    app.add_option("--budget", run.budget, "Search node budget")->default_val(default_budget)->check(CLI::PositiveNumber);
    app.add_flag("--json", run.json, "Emit the JSON certificate");
    add_set_commands(app);
    add_density_commands(app);
    add_structure_commands(app);
    add_ramsey_commands(app);
    add_rado_commands(app);
    add_fink_commands(app);
    add_leth_commands(app);
    add_graph_commands(app);
    add_apx_commands(app);
    add_gen_commands(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }
    if (!action) {
        std::cerr << app.help();
        return 1;
    }
    for (int i = 1; i < argc; ++i)
        if (std::string_view(argv[i]) != "--json") run.inputs += std::string(argv[i]) + '\x1f';
    try {
        action();
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    Certificate cert;
    cert.operation = run.op;
    cert.inputs_digest = fnv1a_hex(run.op + '\n' + run.inputs);
    cert.witness = run.w;
    cert.verified = run.verified;
    if (!run.json && run.raw) std::cout << *run.raw;
    else std::cout << emit_report(cert, run.json ? OutputFormat::json : OutputFormat::text);
    return run.exit;
}

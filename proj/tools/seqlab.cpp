// seqlab: generate, verify, analyze and experiment with the sequence
// constructions provided by the library. Exit codes: 0 success,
// 2 verification mismatch / non-power, 3 resource budget exceeded,
// 4 inconclusive mod-test, 64 usage error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqlab/approxsq.hpp"
#include "seqlab/ekg.hpp"
#include "seqlab/errors.hpp"
#include "seqlab/gijswijt.hpp"
#include "seqlab/numutil.hpp"
#include "seqlab/oeis.hpp"
#include "seqlab/powerseries.hpp"
#include "seqlab/selfref.hpp"
#include "seqlab/theta.hpp"

using namespace seqlab;

namespace {

struct RunConfig {
    std::string format = "bfile";  // bfile | csv | json
    std::string data_dir;
    std::string cache_dir;
    std::uint64_t max_terms = 0;       // 0 = module default
    std::size_t max_digits = approxsq::default_digit_budget;
    std::uint64_t enum_budget = theta::default_enum_budget;
    std::size_t node_limit = series::default_node_limit;
    bool online = false;
};

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v ? std::string(v) : fallback;
}

// Seeds cfg from the environment before parsing, so command-line flags win.
void resolve_env(RunConfig& cfg) {
    cfg.data_dir = env_or("SEQLAB_DATA_DIR", SEQLAB_DEFAULT_DATA_DIR);
    cfg.cache_dir = env_or("SEQLAB_CACHE_DIR", env_or("TMPDIR", "/tmp") + "/seqlab-cache");
    if (const char* v = std::getenv("SEQLAB_MAX_TERMS")) cfg.max_terms = std::strtoull(v, nullptr, 10);
    if (const char* v = std::getenv("SEQLAB_MAX_DIGITS")) cfg.max_digits = std::strtoull(v, nullptr, 10);
    if (const char* v = std::getenv("SEQLAB_ENUM_BUDGET")) cfg.enum_budget = std::strtoull(v, nullptr, 10);
    if (const char* v = std::getenv("SEQLAB_NODE_LIMIT")) cfg.node_limit = std::strtoull(v, nullptr, 10);
}

// ---------------------------------------------------------------------------
// output writers
// ---------------------------------------------------------------------------

class TermWriter {
public:
    TermWriter(std::ostream& out, const std::string& format, long long offset)
        : out_(out), format_(format), n_(offset) {
        if (format_ == "json") out_ << "[\n";
        if (format_ == "csv") out_ << "n,value\n";
    }

    void write(const std::string& value) {
        if (format_ == "bfile") {
            out_ << n_ << ' ' << value << '\n';
        } else if (format_ == "csv") {
            out_ << n_ << ',' << value << '\n';
        } else {
            if (wrote_) out_ << ",\n";
            out_ << "{\"n\":" << n_ << ",\"value\":\"" << value << "\"}";
            wrote_ = true;
        }
        ++n_;
    }

    void finish() {
        if (format_ == "json") out_ << (wrote_ ? "\n" : "") << "]\n";
    }

private:
    std::ostream& out_;
    std::string format_;
    long long n_;
    bool wrote_ = false;
};

template <typename T>
void write_terms(const std::vector<T>& terms, const RunConfig& cfg, long long offset = 1) {
    TermWriter w(std::cout, cfg.format, offset);
    for (const auto& t : terms) {
        if constexpr (std::is_same_v<T, mpz_class>)
            w.write(t.get_str());
        else
            w.write(std::to_string(t));
    }
    w.finish();
}

std::string fixed_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

// Huge integers are reported as leading digits plus a digit count.
std::string int_repr(const mpz_class& z, std::size_t show_digits) {
    std::size_t d = decimal_digits(z);
    if (d <= std::max<std::size_t>(40, show_digits)) return z.get_str();
    std::string s = z.get_str();
    std::size_t sign = s[0] == '-' ? 1 : 0;
    return s.substr(0, show_digits + sign) + "...<" + std::to_string(d) + " digits>";
}

std::string rat_repr(const approxsq::BigRational& q, std::size_t show_digits) {
    std::string n = int_repr(q.get_num(), show_digits);
    if (q.get_den() == 1) return n;
    return n + "/" + int_repr(q.get_den(), show_digits);
}

// ---------------------------------------------------------------------------
// plot data (the figures' raw rows)
// ---------------------------------------------------------------------------

int emit_plot_data(const std::string& kind, std::size_t from, std::size_t to,
                   const RunConfig& cfg) {
    if (to < from || from < 1) throw CLI::ValidationError("plot", "empty range");
    bool json = cfg.format == "json";

    if (kind == "ekg_lines" || kind == "ekg_joined") {
        auto terms = ekg::generate(to, cfg.max_terms ? cfg.max_terms : ekg::default_cap);
        auto labels = ekg::classify(terms);
        if (json) std::cout << "[\n";
        else std::cout << (kind == "ekg_lines" ? "n,a,label,ratio,central_ref\n" : "n,a\n");
        bool first = true;
        for (std::size_t n = from; n <= to; ++n) {
            double ratio = static_cast<double>(terms[n - 1]) / static_cast<double>(n);
            double ref = n > 1 ? 1.0 + 1.0 / (3.0 * std::log(static_cast<double>(n))) : 0.0;
            if (json) {
                std::cout << (first ? "" : ",\n") << "{\"n\":" << n << ",\"a\":" << terms[n - 1];
                if (kind == "ekg_lines")
                    std::cout << ",\"label\":\"" << ekg::line_name(labels[n - 1])
                              << "\",\"ratio\":" << fixed_double(ratio)
                              << ",\"central_ref\":" << fixed_double(ref);
                std::cout << "}";
                first = false;
            } else {
                std::cout << n << ',' << terms[n - 1];
                if (kind == "ekg_lines")
                    std::cout << ',' << ekg::line_name(labels[n - 1]) << ','
                              << fixed_double(ratio) << ',' << fixed_double(ref);
                std::cout << '\n';
            }
        }
        if (json) std::cout << "\n]\n";
        return exit_ok;
    }
    if (kind == "a079000_diffs") {
        auto c = selfref::a079000(to);
        if (json) std::cout << "[\n";
        else std::cout << "n,diff\n";
        bool first = true;
        for (std::size_t n = std::max<std::size_t>(from, 2); n <= to; ++n) {
            auto d = c[n - 1] - c[n - 2];
            if (json) {
                std::cout << (first ? "" : ",\n") << "{\"n\":" << n << ",\"diff\":" << d << "}";
                first = false;
            } else {
                std::cout << n << ',' << d << '\n';
            }
        }
        if (json) std::cout << "\n]\n";
        return exit_ok;
    }
    throw CLI::ValidationError("plot", "unknown kind " + kind);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const std::string& name, std::size_t terms, const RunConfig& cfg) {
    oeis::FetchOptions fopts{cfg.online, cfg.cache_dir, cfg.data_dir};
    std::string id;
    oeis::Sequence computed;

    if (name == "ekg" || name == "A064413") {
        id = "A064413";
        computed = oeis::from_terms(ekg::generate(terms ? terms : 10000), 1, id);
    } else if (name == "gijswijt" || name == "A090822") {
        id = "A090822";
        computed = oeis::from_terms(gijswijt::generate(terms ? terms : 2000), 1, id);
    } else if (name == "gijswijt-order2" || name == "A091787") {
        id = "A091787";
        computed = oeis::from_terms(gijswijt::generate(terms ? terms : 1000, 2), 1, id);
    } else if (name == "a079000" || name == "A079000") {
        id = "A079000";
        computed = oeis::from_terms(selfref::a079000(terms ? terms : 10000), 1, id);
    } else if (name == "golomb" || name == "A001462") {
        id = "A001462";
        computed = oeis::from_terms(selfref::golomb(terms ? terms : 10000), 1, id);
    } else {
        throw CLI::ValidationError(
            "verify", "unknown name '" + name +
                          "' (expected ekg, gijswijt, gijswijt-order2, a079000, golomb)");
    }

    oeis::Sequence reference = oeis::fetch_bfile(id, fopts);
    auto rep = oeis::compare(computed, reference);
    if (!rep.match) {
        std::cout << name << ": MISMATCH at n=" << rep.mismatch_index << ": computed "
                  << rep.lhs.get_str() << ", reference " << rep.rhs.get_str() << "\n";
        return exit_mismatch;
    }
    std::cout << name << ": OK, " << rep.overlap << " terms agree with " << id << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"seqlab: integer-sequence constructions, cross-checks and experiments"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--data-dir", cfg.data_dir, "data directory (fixtures, reference tables)");
    app.add_option("--cache-dir", cfg.cache_dir, "b-file cache directory");

    // ---- generate -----------------------------------------------------------
    auto* gen = app.add_subcommand("generate", "generate sequence terms");
    gen->require_subcommand(1);
    std::size_t g_terms = 18;
    int g_floor = 1;
    std::string g_method = "greedy";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--terms", g_terms, "number of terms")->required();
        cmd->add_option("--format", cfg.format, "bfile|csv|json")
            ->check(CLI::IsMember({"bfile", "csv", "json"}));
        cmd->add_option("--max-terms", cfg.max_terms, "generation cap override");
    };

    auto* gen_ekg = gen->add_subcommand("ekg", "EKG sequence A064413");
    add_common(gen_ekg);
    gen_ekg->callback([&] {
        std::uint64_t cap = cfg.max_terms ? cfg.max_terms : ekg::default_cap;
        if (g_terms > cap)
            throw resource_limit_error("requested terms exceed cap " + std::to_string(cap));
        // stream straight off the generator: b-files can be large
        ekg::Generator g;
        TermWriter w(std::cout, cfg.format, 1);
        w.write("1");
        if (g_terms >= 2) w.write("2");
        for (std::size_t n = 2; n < g_terms; ++n) w.write(std::to_string(g.next()));
        w.finish();
    });

    auto* gen_gij = gen->add_subcommand("gijswijt", "Gijswijt's sequence A090822 and friends");
    add_common(gen_gij);
    gen_gij->add_option("--floor", g_floor, "order (1 = A090822, 2 = A091787, ...)");
    gen_gij->callback([&] {
        resolve_env(cfg);
        write_terms(gijswijt::generate(g_terms, g_floor,
                                       cfg.max_terms ? cfg.max_terms : gijswijt::default_cap),
                    cfg);
    });

    auto* gen_a79 = gen->add_subcommand("a079000", "self-referential sequence A079000");
    add_common(gen_a79);
    gen_a79->add_option("--method", g_method, "greedy|closed")
        ->check(CLI::IsMember({"greedy", "closed"}));
    gen_a79->callback([&] {
        resolve_env(cfg);
        if (g_method == "closed") {
            std::vector<std::int64_t> t(g_terms);
            for (std::size_t n = 1; n <= g_terms; ++n)
                t[n - 1] = selfref::a079000_closed(n);
            write_terms(t, cfg);
        } else {
            write_terms(selfref::a079000(g_terms), cfg);
        }
    });

    auto* gen_gol = gen->add_subcommand("golomb", "Golomb's self-describing sequence A001462");
    add_common(gen_gol);
    gen_gol->callback([&] {
        resolve_env(cfg);
        write_terms(selfref::golomb(g_terms), cfg);
    });

    // ---- analyze ------------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "structure reports and plot data");
    analyze->require_subcommand(1);

    auto* an_ekg = analyze->add_subcommand("ekg", "three-line classification rows");
    bool plot_lines = false;
    std::size_t an_terms = 1000;
    an_ekg->add_flag("--plot-lines", plot_lines, "emit (n, a(n), label, ratio) rows");
    an_ekg->add_option("--terms", an_terms, "prefix length");
    an_ekg->add_option("--format", cfg.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    an_ekg->callback([&] {
        resolve_env(cfg);
        if (cfg.format == "bfile") cfg.format = "csv";
        emit_plot_data("ekg_lines", 1, an_terms, cfg);
    });

    auto* an_gij = analyze->add_subcommand("gijswijt", "block/glue structure");
    auto* an_blocks = an_gij->add_subcommand("blocks", "B_m and S_m of the order-m sequence");
    int blk_order = 1;
    std::size_t blk_count = 5;
    an_blocks->add_option("--order", blk_order, "sequence order (floor)");
    an_blocks->add_option("--count", blk_count, "how many (block, glue) pairs");
    an_blocks->callback([&] {
        resolve_env(cfg);
        auto bgs = gijswijt::block_decomposition(blk_count, blk_order,
                                                 cfg.max_terms ? cfg.max_terms
                                                               : gijswijt::default_cap);
        for (const auto& bg : bgs) {
            std::cout << "B_" << bg.order << " (len " << bg.block.size() << "):";
            if (bg.block.size() <= 40)
                for (int v : bg.block) std::cout << ' ' << v;
            else
                std::cout << " [" << bg.block.size() << " terms]";
            std::cout << "\nS_" << bg.order << " (len " << bg.glue.size() << "):";
            for (int v : bg.glue) std::cout << ' ' << v;
            std::cout << "\n";
        }
    });

    auto* an_a79 = analyze->add_subcommand("a079000", "difference-run structure");
    bool diff_runs = false;
    std::size_t a79_terms = 10000;
    an_a79->add_flag("--diff-runs", diff_runs, "run-length encode first differences");
    an_a79->add_option("--terms", a79_terms, "prefix length");
    an_a79->callback([&] {
        resolve_env(cfg);
        auto runs = selfref::difference_runs(selfref::a079000(a79_terms));
        for (const auto& r : runs) std::cout << r.value << "^" << r.length << "\n";
    });

    // ---- plot ---------------------------------------------------------------
    auto* plot = app.add_subcommand("plot", "raw figure data");
    std::string plot_kind = "ekg_lines";
    std::size_t plot_from = 1, plot_to = 1000;
    plot->add_option("--kind", plot_kind, "ekg_lines|ekg_joined|a079000_diffs")
        ->check(CLI::IsMember({"ekg_lines", "ekg_joined", "a079000_diffs"}));
    plot->add_option("--from", plot_from, "first index");
    plot->add_option("--to", plot_to, "last index");
    plot->add_option("--format", cfg.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    plot->callback([&] {
        resolve_env(cfg);
        if (cfg.format == "bfile") cfg.format = "csv";
        emit_plot_data(plot_kind, plot_from, plot_to, cfg);
    });

    // ---- experiment ---------------------------------------------------------
    auto* exp = app.add_subcommand("experiment", "conjecture experiments");
    auto* fin = exp->add_subcommand("finiteness", "extend by the curling rule until a 1 appears");
    std::string fin_initial;
    std::size_t fin_steps = 100000;
    fin->add_option("--initial", fin_initial, "comma-separated start, e.g. \"2,3,2,2\"")->required();
    fin->add_option("--max-steps", fin_steps, "extension budget");
    fin->callback([&] {
        std::vector<int> initial;
        std::stringstream ss(fin_initial);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) initial.push_back(std::stoi(tok));
        auto r = gijswijt::finiteness_experiment(initial, fin_steps);
        if (r.found_one && r.steps == 0)
            std::cout << "a 1 is already present in the initial string\n";
        else if (r.found_one)
            std::cout << "first 1 appears after " << r.steps << " extension steps\n";
        else
            std::cout << "timeout: no 1 within " << fin_steps << " extension steps\n";
    });

    // ---- approxsq -----------------------------------------------------------
    auto* asq = app.add_subcommand("approxsq", "iterate x -> x*ceil(x) over exact rationals");
    std::string asq_start;
    std::size_t asq_steps = approxsq::default_max_steps;
    std::size_t asq_show = 10;
    asq->add_option("start", asq_start, "starting rational, e.g. 6/5");
    asq->add_option("--max-steps", asq_steps, "iteration budget");
    asq->add_option("--show-digits", asq_show, "leading digits shown for huge values");
    asq->add_option("--max-digits", cfg.max_digits, "numerator digit budget");

    auto* asq_table = asq->add_subcommand("table", "steps/final table for a denominator range");
    int tab_den = 3, tab_from = 3, tab_to = 20;
    asq_table->add_option("--denominator", tab_den, "fixed denominator")->required();
    asq_table->add_option("--from", tab_from, "first numerator");
    asq_table->add_option("--to", tab_to, "last numerator");
    asq_table->callback([&] {
        resolve_env(cfg);
        if (tab_den < 1 || tab_from > tab_to) throw CLI::ValidationError("table", "bad range");
        std::cout << "start steps reaches\n";
        for (int n = tab_from; n <= tab_to; ++n) {
            auto t = approxsq::trajectory(approxsq::BigRational(n, tab_den), asq_steps,
                                          cfg.max_digits);
            std::cout << n << "/" << tab_den << " ";
            if (t.terminated)
                std::cout << t.steps.size() << " " << int_repr(t.final_value().get_num(), asq_show);
            else
                std::cout << "- " << (t.budget_exceeded ? "digit-budget" : "timeout");
            std::cout << "\n";
        }
    });

    asq->callback([&] {
        if (asq->get_subcommands().size() > 0) return;  // `table` handled above
        if (asq_start.empty()) throw CLI::ValidationError("approxsq", "missing start value");
        resolve_env(cfg);
        auto x0 = approxsq::parse_rational(asq_start);
        auto t = approxsq::trajectory(x0, asq_steps, cfg.max_digits);
        std::cout << "0 " << rat_repr(t.start, asq_show) << "\n";
        for (std::size_t i = 0; i < t.steps.size(); ++i)
            std::cout << i + 1 << " " << rat_repr(t.steps[i], asq_show) << "\n";
        if (t.terminated)
            std::cout << "reached an integer with " << t.final_integer_digits << " digits after "
                      << t.steps.size() << " steps\n";
        else if (t.budget_exceeded)
            std::cout << "stopped: numerator exceeded " << cfg.max_digits << " digits\n";
        else
            std::cout << "no integer within " << asq_steps << " steps\n";
    });

    // ---- series -------------------------------------------------------------
    auto* ser = app.add_subcommand("series", "integer power-series roots and power tests");
    ser->require_subcommand(1);
    unsigned ser_k = 2;
    std::string ser_file;
    std::size_t ser_order = 0;

    auto* ser_root = ser->add_subcommand("root", "k-th root with integer coefficients");
    ser_root->add_option("--k", ser_k, "root degree")->required();
    ser_root->add_option("--coeffs-file", ser_file, "coefficient file (one per line)")->required();
    ser_root->add_option("--order", ser_order, "truncation order (default: file length - 1)");
    ser_root->callback([&] {
        resolve_env(cfg);
        auto f = series::read_coeff_file(ser_file);
        if (ser_order > 0) f = f.truncated(std::min(ser_order, f.order()));
        auto res = series::kth_root(f, ser_k);
        if (!res.ok()) {
            std::cerr << "not a " << ser_k << "-th power over the integers: coefficient of x^"
                      << res.failure_index << " is not divisible by " << ser_k << "\n";
            std::exit(exit_mismatch);
        }
        for (std::size_t i = 0; i <= res.root->order(); ++i)
            std::cout << i << " " << res.root->c[i].get_str() << "\n";
    });

    auto* ser_test = ser->add_subcommand("powertest", "mod-mu_k k-th power criterion");
    ser_test->add_option("--k", ser_k, "power to test")->required();
    ser_test->add_option("--coeffs-file", ser_file, "coefficient file")->required();
    ser_test->add_option("--node-limit", cfg.node_limit, "search budget");
    ser_test->callback([&] {
        resolve_env(cfg);
        auto f = series::read_coeff_file(ser_file);
        auto r = series::is_kth_power_mod(f, ser_k, cfg.node_limit);
        std::cout << "mu(" << ser_k << ") = " << series::mu(ser_k) << "\n";
        switch (r) {
            case series::PowerMod::yes:
                std::cout << "k-th power mod mu: yes\n";
                break;
            case series::PowerMod::no:
                std::cout << "k-th power mod mu: no\n";
                std::exit(exit_mismatch);
            case series::PowerMod::inconclusive:
                std::cout << "k-th power mod mu: inconclusive (node limit reached)\n";
                std::exit(exit_inconclusive);
        }
    });

    // ---- theta --------------------------------------------------------------
    auto* th = app.add_subcommand("theta", "lattice theta series by exact enumeration");
    std::string th_lattice, th_gram, th_fixture;
    std::size_t th_norm = 20;
    unsigned th_root = 0;
    bool th_serial = false;
    th->add_option("--lattice", th_lattice, "builtin lattice: Z1..Z16, A2, D4, E8");
    th->add_option("--gram-file", th_gram, "gram matrix file (n rows of n integers)");
    th->add_option("--fixture", th_fixture, "bundled series: Leech, Nebe24");
    th->add_option("--max-norm", th_norm, "largest vector norm to count");
    th->add_option("--root", th_root, "also require/print the k-th root of the series");
    th->add_flag("--serial", th_serial, "use the serial enumeration kernel");
    th->add_option("--budget", cfg.enum_budget, "enumeration budget (vectors)");
    th->callback([&] {
        resolve_env(cfg);
        theta::ThetaSeries ts;
        if (!th_fixture.empty()) {
            ts = theta::fixture_theta(th_fixture, cfg.data_dir);
        } else {
            theta::Lattice lat = !th_gram.empty() ? theta::read_gram_file(th_gram)
                                                  : theta::builtin_lattice(
                                                        th_lattice.empty() ? "D4" : th_lattice);
            ts = theta::theta_series(lat, th_norm,
                                     th_serial ? theta::Exec::serial : theta::Exec::parallel,
                                     cfg.enum_budget);
        }
        if (th_root > 0) {
            auto res = series::kth_root(ts.series, th_root);
            if (!res.ok()) {
                std::cerr << "theta series is not a " << th_root
                          << "-th power: failure at x^" << res.failure_index << "\n";
                std::exit(exit_mismatch);
            }
            for (std::size_t i = 0; i <= res.root->order(); ++i)
                std::cout << i << " " << res.root->c[i].get_str() << "\n";
        } else {
            auto [tau, u] = theta::kissing_number(ts);
            std::cout << "# kissing number " << tau << " at norm " << u << "\n";
            for (std::size_t i = 0; i <= ts.series.order(); ++i)
                std::cout << i << " " << ts.series.c[i].get_str() << "\n";
        }
    });

    // ---- kissing ------------------------------------------------------------
    auto* kiss = app.add_subcommand("kissing", "kissing numbers: computed where solved, else bounds");
    kiss->callback([&] {
        resolve_env(cfg);
        auto read_off = [&](const char* name, std::size_t norm) {
            auto t = theta::theta_series(theta::builtin_lattice(name), norm);
            return theta::kissing_number(t).first;
        };
        std::cout << "dim value status source\n";
        std::cout << "1 " << read_off("Z1", 2) << " exact computed:Z1\n";
        std::cout << "2 " << read_off("A2", 2) << " exact computed:A2\n";
        std::cout << "4 " << read_off("D4", 2) << " exact computed:D4\n";
        std::cout << "8 " << read_off("E8", 2) << " exact computed:E8\n";
        auto leech = theta::fixture_theta("Leech", cfg.data_dir);
        std::cout << "24 " << theta::kissing_number(leech).first << " exact fixture:Leech\n";
        std::ifstream ref(cfg.data_dir + "/reference/kissing_numbers.txt");
        if (ref) {
            std::string line;
            while (std::getline(ref, line)) {
                if (line.empty() || line[0] == '#') continue;
                std::istringstream iss(line);
                int dim;
                std::uint64_t value;
                std::string status;
                if (!(iss >> dim >> value >> status)) continue;
                if (dim == 1 || dim == 2 || dim == 4 || dim == 8 || dim == 24) continue;
                std::cout << dim << " " << value << " " << status << " reference\n";
            }
        }
    });

    // ---- verify -------------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "compare generated terms against OEIS data");
    std::string ver_name;
    std::size_t ver_terms = 0;
    ver->add_option("name", ver_name, "ekg|gijswijt|gijswijt-order2|a079000|golomb")->required();
    ver->add_option("--terms", ver_terms, "terms to generate (default: fixture length)");
    ver->add_flag("--online", cfg.online, "allow fetching b-files from oeis.org");
    ver->callback([&] {
        resolve_env(cfg);
        std::exit(run_verify(ver_name, ver_terms, cfg));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return exit_resource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_ok;
}

#include "qseries/cli.hpp"

#include <atomic>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qseries/dsl.hpp"
#include "qseries/identities.hpp"
#include "qseries/products.hpp"

namespace qseries::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr Exponent kDefaultOrder = 50;

enum class Format { text, json, csv };

struct Range {
    Exponent lo = 0;
    Exponent hi = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Exponent parse_int(std::string_view s, const std::string& what) {
    Exponent v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw UsageError("bad integer '" + std::string(s) + "' in " + what);
    }
    return v;
}

Range parse_range(const std::string& text, const std::string& what) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const Exponent v = parse_int(text, what);
        return {v, v};
    }
    Range r{parse_int(std::string_view(text).substr(0, dots), what),
            parse_int(std::string_view(text).substr(dots + 2), what)};
    if (r.lo > r.hi) {
        throw UsageError("empty range " + text + " for " + what);
    }
    return r;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (const char c : s) {
        q += c;
        if (c == '"') {
            q += '"';
        }
    }
    return q + "\"";
}

std::string params_text(const Params& p, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        s += (i ? sep : "") + p[i].first + "=" + std::to_string(p[i].second);
    }
    return s;
}

json report_json(const IdentityReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) {
        params[k] = v;
    }
    json j;
    j["identity"] = r.identity;
    j["params"] = params;
    j["order"] = r.order;
    j["outcome"] = to_string(r.outcome);
    j["first_mismatch"] = r.first_mismatch ? json(*r.first_mismatch) : json(nullptr);
    j["millis"] = r.millis;
    j["variant"] = r.variant;
    return j;
}

void emit_reports(const std::vector<IdentityReport>& reports, Format fmt, std::ostream& os) {
    if (fmt == Format::json) {
        json arr = json::array();
        for (const auto& r : reports) {
            arr.push_back(report_json(r));
        }
        os << arr.dump(2) << "\n";
        return;
    }
    if (fmt == Format::csv) {
        os << "identity,params,order,outcome,first_mismatch,millis,variant\n";
        for (const auto& r : reports) {
            os << csv_field(r.identity) << "," << csv_field(params_text(r.params, ";")) << ","
               << r.order << "," << to_string(r.outcome) << ","
               << (r.first_mismatch ? std::to_string(*r.first_mismatch) : "") << "," << r.millis
               << "," << csv_field(r.variant) << "\n";
        }
        return;
    }
    for (const auto& r : reports) {
        os << r.identity;
        if (!r.params.empty()) {
            os << " " << params_text(r.params, " ");
        }
        os << " order=" << r.order << " " << to_string(r.outcome);
        if (r.first_mismatch) {
            os << " at q^" << *r.first_mismatch;
        }
        os << " (" << r.millis << " ms)";
        if (!r.variant.empty()) {
            os << " [" << r.variant << "]";
        }
        os << "\n";
    }
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads. The first error
// is rethrown after all workers finish.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

struct Output {
    std::string path;
    std::ofstream file;

    std::ostream& stream(std::ostream& fallback) {
        if (path.empty()) {
            return fallback;
        }
        file.open(path);
        if (!file) {
            throw UsageError("cannot open " + path + " for writing");
        }
        return file;
    }
};

template <typename E>
E pick(const std::string& value, std::initializer_list<std::pair<const char*, E>> choices) {
    for (const auto& [name, e] : choices) {
        if (value == name) {
            return e;
        }
    }
    throw UsageError("unknown choice '" + value + "'");
}

int cmd_coeffs(const std::string& expr, Exponent order, Format fmt, std::ostream& os) {
    const Series s = dsl::eval(expr, order);
    std::vector<std::pair<Exponent, Integer>> rows;
    if (!s.is_zero()) {
        for (Exponent e = s.valuation(); e <= s.order(); ++e) {
            rows.emplace_back(e, s.coeff(e));
        }
    }
    if (fmt == Format::json) {
        json j;
        j["expression"] = expr;
        j["order"] = order;
        json arr = json::array();
        for (const auto& [e, c] : rows) {
            arr.push_back({{"exponent", e}, {"coefficient", c.get_str()}});
        }
        j["coefficients"] = arr;
        os << j.dump(2) << "\n";
    } else if (fmt == Format::csv) {
        os << "exponent,coefficient\n";
        for (const auto& [e, c] : rows) {
            os << e << "," << c << "\n";
        }
    } else {
        for (const auto& [e, c] : rows) {
            os << e << " " << c << "\n";
        }
    }
    return 0;
}

struct VerifyArgs {
    std::string id;
    std::map<std::string, std::string> ranges;
    std::string quin_sign = "adjudicated";
    std::string sept_tset = "corrected";
    std::string jtp_form = "derived";
    std::string d_reading = "adjudicated";
    std::string agen_reading = "all";
};

int cmd_verify(const VerifyArgs& a, Exponent order, Format fmt, unsigned jobs, std::ostream& os) {
    const auto id = parse_identity(a.id);
    if (!id) {
        throw UsageError("unknown identity " + a.id);
    }
    VerifyOptions opt;
    opt.quin_sign = pick<QuinSign>(a.quin_sign, {{"adjudicated", QuinSign::adjudicated},
                                                 {"printed", QuinSign::printed}});
    opt.sept_tset = pick<SeptTSet>(a.sept_tset, {{"corrected", SeptTSet::corrected},
                                                 {"printed", SeptTSet::printed}});
    opt.jtp = pick<JtpVariant>(a.jtp_form, {{"derived", JtpVariant::derived},
                                            {"prefactor", JtpVariant::prefactor},
                                            {"printed", JtpVariant::printed}});
    opt.d_reading = pick<Reading>(a.d_reading, {{"adjudicated", Reading::adjudicated},
                                                {"printed", Reading::printed}});
    opt.agen_reading =
        pick<Reading>(a.agen_reading, {{"all", Reading::adjudicated}, {"largest", Reading::printed}});

    // Cartesian product of the identity's parameter ranges, in parameter order.
    std::vector<ParamMap> cells{ParamMap{}};
    for (const auto& name : identity_params(*id)) {
        Range r{0, 0};
        if (const auto it = a.ranges.find(name); it != a.ranges.end() && !it->second.empty()) {
            r = parse_range(it->second, "--" + name);
        } else if (name == "n" || name == "l") {
            throw UsageError(a.id + " needs --" + name);
        }
        std::vector<ParamMap> next;
        for (const auto& cell : cells) {
            for (Exponent v = r.lo; v <= r.hi; ++v) {
                ParamMap c = cell;
                c[name] = v;
                next.push_back(std::move(c));
            }
        }
        cells = std::move(next);
    }

    std::vector<IdentityReport> reports(cells.size());
    parallel_for(cells.size(), jobs,
                 [&](std::size_t i) { reports[i] = verify(*id, cells[i], order, opt); });
    emit_reports(reports, fmt, os);
    for (const auto& r : reports) {
        if (!r.passed()) {
            return 1;
        }
    }
    return 0;
}

int cmd_corollary(const std::string& variant, Exponent n, const std::string& mrange, Format fmt,
                  std::ostream& os) {
    const Range m = mrange.empty() ? Range{0, n} : parse_range(mrange, "--m");
    if (m.lo < 0 || m.hi > n) {
        throw DomainError("the corollary needs 0 <= m <= n");
    }
    std::vector<Integer> closed;
    Series direct;
    if (variant == "quin") {
        closed = cor_quin_coefficients(n, m.hi);
        direct = invert(theta6(m.hi));
    } else if (variant == "sept14" || variant == "sept23") {
        const SeptVariant v = variant == "sept14" ? SeptVariant::v14 : SeptVariant::v23;
        closed = cor_sept_coefficients(v, n, m.hi);
        direct = lem_sept_target(v, m.hi);
    } else {
        throw UsageError("unknown corollary " + variant);
    }
    bool all = true;
    json arr = json::array();
    if (fmt == Format::csv) {
        os << "m,closed_form,direct,match\n";
    }
    for (Exponent i = m.lo; i <= m.hi; ++i) {
        const Integer& c = closed[static_cast<std::size_t>(i)];
        const Integer d = direct.coeff(i);
        const bool ok = c == d;
        all = all && ok;
        if (fmt == Format::json) {
            arr.push_back({{"m", i}, {"closed_form", c.get_str()}, {"direct", d.get_str()}, {"match", ok}});
        } else if (fmt == Format::csv) {
            os << i << "," << c << "," << d << "," << (ok ? "true" : "false") << "\n";
        } else {
            os << "m=" << i << " closed=" << c << " direct=" << d << (ok ? " ok" : " MISMATCH") << "\n";
        }
    }
    if (fmt == Format::json) {
        json j;
        j["corollary"] = variant;
        j["n"] = n;
        j["rows"] = arr;
        os << j.dump(2) << "\n";
    }
    return all ? 0 : 1;
}

int cmd_bench(const std::string& orders, bool n100, Format fmt, std::ostream& os) {
    json arr = json::array();
    if (fmt == Format::csv) {
        os << "order,mul_schoolbook_ms,mul_fast_ms,invert_ms\n";
    } else if (fmt == Format::text) {
        os << "order  mul_schoolbook_ms  mul_fast_ms  invert_ms\n";
    }
    std::stringstream list(orders);
    std::string item;
    while (std::getline(list, item, ',')) {
        const Exponent n = parse_int(item, "--orders");
        if (n < 0) {
            throw UsageError("orders must be >= 0");
        }
        const Series f = invert(theta6(n));
        Stopwatch t1;
        const Series slow = mul(f, f, MulAlgorithm::schoolbook);
        const auto ms_slow = t1.millis();
        Stopwatch t2;
        const Series fast = mul(f, f, MulAlgorithm::kronecker);
        const auto ms_fast = t2.millis();
        Stopwatch t3;
        const Series inv = invert(f);
        const auto ms_inv = t3.millis();
        if (!(slow == fast)) {
            throw Error("fast multiplication disagrees with schoolbook at order " + item);
        }
        if (fmt == Format::json) {
            arr.push_back({{"order", n}, {"mul_schoolbook_ms", ms_slow}, {"mul_fast_ms", ms_fast},
                           {"invert_ms", ms_inv}});
        } else if (fmt == Format::csv) {
            os << n << "," << ms_slow << "," << ms_fast << "," << ms_inv << "\n";
        } else {
            os << n << "  " << ms_slow << "  " << ms_fast << "  " << ms_inv << "\n";
        }
    }
    int code = 0;
    json repro;
    if (n100) {
        Stopwatch t;
        constexpr Exponent kN = 100;
        constexpr Exponent kM = 20;
        const auto closed = cor_quin_coefficients(kN, kM);
        const Series direct = invert(theta6(kM));
        bool ok = true;
        for (Exponent m = 0; m <= kM; ++m) {
            ok = ok && closed[static_cast<std::size_t>(m)] == direct.coeff(m);
        }
        const auto b = bounds_quin(kN);
        code = ok ? 0 : 1;
        if (fmt == Format::json) {
            repro = {{"n", kN}, {"m_max", kM}, {"r1", b.r1}, {"r2", b.r2}, {"match", ok},
                     {"millis", t.millis()}};
        } else {
            os << "n=100 corollary a(0.." << kM << ") with k in " << b.r1 + 1 << ".." << b.r2 - 1
               << ": " << (ok ? "match" : "MISMATCH") << " (" << t.millis() << " ms)\n";
        }
    }
    if (fmt == Format::json) {
        json j;
        j["timings"] = arr;
        if (n100) {
            j["n100"] = repro;
        }
        os << j.dump(2) << "\n";
    }
    return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-series engine for MacMahon-type partition functions"};
    app.require_subcommand(1);

    Exponent order = kDefaultOrder;
    std::string format = "text";
    std::string out_path;
    unsigned jobs = 1;

    auto common = [&](CLI::App* sub) {
        sub->add_option("-N,--order", order, "truncation order")
            ->envname("QSERIES_ORDER")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--format", format, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", out_path, "write output to this file");
    };

    auto* coeffs = app.add_subcommand("coeffs", "print coefficients of a q-series expression");
    std::string expr;
    coeffs->add_option("expr", expr, "expression")->required();
    common(coeffs);

    auto* verify_cmd = app.add_subcommand("verify", "verify an identity over parameter ranges");
    VerifyArgs va;
    verify_cmd->add_option("identity", va.id, "identity id")->required();
    for (const char* p : {"n", "k", "beta", "gamma", "l", "j"}) {
        verify_cmd->add_option(std::string("--") + p, va.ranges[p], "value or range a..b");
    }
    verify_cmd->add_option("--quin-sign", va.quin_sign, "adjudicated or printed");
    verify_cmd->add_option("--sept-tset", va.sept_tset, "corrected or printed");
    verify_cmd->add_option("--jtp-form", va.jtp_form, "derived, prefactor or printed");
    verify_cmd->add_option("--d-reading", va.d_reading, "adjudicated or printed");
    verify_cmd->add_option("--agen-reading", va.agen_reading, "all or largest");
    verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    common(verify_cmd);

    auto* corollary = app.add_subcommand("corollary", "closed-form corollary coefficients");
    std::string variant;
    Exponent cn = 0;
    std::string mrange;
    corollary->add_option("variant", variant, "quin, sept14 or sept23")
        ->required()
        ->check(CLI::IsMember({"quin", "sept14", "sept23"}));
    corollary->add_option("--n", cn, "level n")->required();
    corollary->add_option("--m", mrange, "coefficient range a..b (default 0..n)");
    common(corollary);

    auto* bench = app.add_subcommand("bench", "multiplication and inversion timings");
    std::string orders = "1000,2000";
    bool n100 = false;
    bench->add_option("--orders", orders, "comma-separated orders");
    bench->add_flag("--n100", n100, "also reproduce the n = 100 corollary example");
    common(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const Format fmt = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
    try {
        Output sink{out_path, {}};
        std::ostream& os = sink.stream(out);
        if (coeffs->parsed()) {
            return cmd_coeffs(expr, order, fmt, os);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(va, order, fmt, jobs, os);
        }
        if (corollary->parsed()) {
            return cmd_corollary(variant, cn, mrange, fmt, os);
        }
        return cmd_bench(orders, n100, fmt, os);
    } catch (const dsl::DslError& e) {
        const auto s = e.span();
        err << "error: " << e.what() << " at bytes " << s.begin << ".." << s.end << "\n";
        if (coeffs->parsed()) {
            err << "  " << expr << "\n  " << std::string(s.begin, ' ')
                << std::string(std::max<std::size_t>(s.end - s.begin, 1), '^') << "\n";
        }
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qseries::cli

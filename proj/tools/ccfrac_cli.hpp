#pragma once

// Command line front end. run() is kept separate from main() so the tests
// can drive it in-process.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccfrac/ccfrac.hpp"

namespace ccfrac::cli {

using nlohmann::json;

enum ExitCode { kOk = 0, kUsage = 1, kDomain = 2 };

struct Outcome {
    int code = kOk;
    std::string out;
};

// Integers go out as JSON numbers when they fit in 64 bits, else as strings.
inline json int_json(const Integer& v)
{
    if (v.fits_slong_p()) {
        return static_cast<std::int64_t>(v.get_si());
    }
    return v.get_str();
}

inline json ints_json(const std::vector<Integer>& vs)
{
    json a = json::array();
    for (const Integer& v : vs) a.push_back(int_json(v));
    return a;
}

inline json mat_json(const Mat2& m)
{
    return json::array({json::array({int_json(m.a()), int_json(m.b())}),
                        json::array({int_json(m.c()), int_json(m.d())})});
}

inline json form_json(const QForm& q) { return json::array({int_json(q.a), int_json(q.b), int_json(q.c)}); }

inline json cf_json(const ContinuedFraction& cf)
{
    return {{"coeffs", ints_json(cf.coeffs())},
            {"tail", format(cf.tail())},
            {"domain", cf.domain() == TailDomain::Fprime ? "Fprime" : "Gprime"},
            {"canonical", is_canonical(cf)}};
}

inline std::vector<Integer> parse_int_list(const std::string& text, std::size_t want = 0)
{
    std::vector<Integer> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        Integer v;
        if (item.empty() || v.set_str(item, 10) != 0) {
            throw ParseError(0, "bad integer '" + item + "' in list");
        }
        out.push_back(v);
    }
    if (out.empty() || (want && out.size() != want)) {
        throw ParseError(0, "expected " + (want ? std::to_string(want) : std::string("some")) + " integers");
    }
    return out;
}

inline std::size_t max_steps_from_env()
{
    if (const char* s = std::getenv("CCFRAC_MAX_STEPS")) {
        try {
            const long long v = std::stoll(s);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return kDefaultMaxSteps;
}

inline Variant parse_variant(const std::string& v)
{
    if (v == "v2") return Variant::V2;
    if (v == "v3") return Variant::V3;
    return Variant::V1;
}

// Plain text rendering of a result object.
inline std::string plain_text(const json& j, const std::string& indent = "")
{
    std::string s;
    for (auto it = j.begin(); it != j.end(); ++it) {
        s += indent + it.key() + ": ";
        if (it->is_string()) {
            s += it->get<std::string>() + "\n";
        } else if (it->is_object()) {
            s += "\n" + plain_text(*it, indent + "  ");
        } else {
            s += it->dump() + "\n";
        }
    }
    return s;
}

// CLI11 reads "-101732/28505 + ..." as a cluster of short flags. Arguments
// that start like a number are therefore protected before parsing.
inline bool looks_numeric(const std::string& a)
{
    return a.size() > 1 && a[0] == '-' &&
           (std::isdigit(static_cast<unsigned char>(a[1])) || a[1] == '(' || a[1] == 'i' || a[1] == 's' ||
            a[1] == ' ' || a[1] == 'S' || a[1] == 'I');
}

inline Outcome run(std::vector<std::string> args);

namespace detail {

inline std::vector<std::string> split_line(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false, have = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
            have = true;
        } else if (!quoted && std::isspace(static_cast<unsigned char>(c))) {
            if (have) out.push_back(cur);
            cur.clear();
            have = false;
        } else {
            cur += c;
            have = true;
        }
    }
    if (have) out.push_back(cur);
    return out;
}

inline Outcome run_batch(const std::string& path, unsigned jobs)
{
    std::ifstream in(path);
    if (!in) {
        return {kUsage, json{{"status", "error"}, {"error", {{"code", "Usage"}, {"message", "cannot read " + path}}}}
                                .dump() + "\n"};
    }
    std::vector<std::vector<std::string>> lines;
    for (std::string line; std::getline(in, line);) {
        auto a = split_line(line);
        if (!a.empty() && a[0][0] != '#') lines.push_back(std::move(a));
    }
    std::vector<Outcome> results(lines.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < lines.size();) {
            results[k] = run(lines[k]);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    Outcome total;
    for (const Outcome& r : results) {
        total.out += r.out;
        total.code = std::max(total.code, r.code);
    }
    return total;
}

// Static picture of closure(F') and its two neighbouring translates.
inline std::string render_svg(int width)
{
    const double scale = width / 4.0;
    const double h = width * 0.75;
    const double top = 1.4;
    const double yc = std::sqrt(3.0) / 2;
    auto px = [&](double x) { return (x + 2.0) * scale; };
    auto py = [&](double y) { return h / 2 - y * scale; };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << h << "\">\n";
    s << "<line x1=\"0\" y1=\"" << py(0) << "\" x2=\"" << width << "\" y2=\"" << py(0) << "\" stroke=\"#999\"/>\n";
    for (int k = -1; k <= 1; ++k) {
        const char* fill = k == 0 ? "#cfe0f5" : "#eef3fa";
        for (int half : {1, -1}) {
            // down the left side to a corner, round the unit arcs through k, up the right side
            const int sweep = half > 0 ? 0 : 1;
            s << "<path fill=\"" << fill << "\" stroke=\"#246\" d=\"M" << px(k - 0.5) << "," << py(half * top)
              << " L" << px(k - 0.5) << "," << py(half * yc) << " A" << scale << "," << scale << " 0 0 " << sweep
              << " " << px(k) << "," << py(0) << " A" << scale << "," << scale << " 0 0 " << sweep << " "
              << px(k + 0.5) << "," << py(half * yc) << " L" << px(k + 0.5) << "," << py(half * top)
              << " Z\"/>\n";
        }
    }
    s << "</svg>\n";
    return s.str();
}

} // namespace detail

/// Runs one invocation; args exclude the program name.
inline Outcome run(std::vector<std::string> args)
{
    CLI::App app{"Integer continued fractions for complex numbers", "ccfrac"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    bool plain = false;
    std::string batch;
    unsigned jobs = 1;
    app.add_flag("--plain", plain, "human readable output instead of JSON");
    app.add_option("--batch", batch, "file with one command per line");
    app.add_option("--jobs", jobs, "worker threads for --batch")->check(CLI::PositiveNumber);

    std::string z, w, variant = "v1", list, basis = "lr", coeffs, tail = "0", text, out_path;
    bool gprime = false, gauss = false;
    std::size_t max_steps = max_steps_from_env();
    int svg_width = 600;

    auto* cf = app.add_subcommand("cf", "canonical expansion of an exact number");
    cf->add_option("z", z, "number, e.g. \"(1-3*i)/4\"")->required();
    cf->add_option("--variant", variant)->check(CLI::IsMember({"v1", "v2", "v3"}));
    cf->add_flag("--gprime", gprime, "also give the G' representation");

    auto* ev = app.add_subcommand("eval", "value of [a0, ..., an + tail]");
    ev->add_option("coeffs", coeffs, "comma separated coefficients")->required();
    ev->add_option("tail", tail, "tail in F'");

    auto* cj = app.add_subcommand("conj", "expansion of the conjugate from the expansion of z");
    cj->add_option("z", z)->required();
    cj->add_option("--variant", variant)->check(CLI::IsMember({"v1", "v2", "v3"}));

    auto* se = app.add_subcommand("serret", "GL(2,Z) equivalence of two numbers");
    se->add_option("z", z)->required();
    se->add_option("w", w)->required();

    auto* rl = app.add_subcommand("reduce-lattice", "minimal basis of Z w1 + Z w2");
    rl->add_option("w1", z)->required();
    rl->add_option("w2", w)->required();
    rl->add_flag("--gauss", gauss, "use nearest-integer Gauss steps instead");

    auto* rf = app.add_subcommand("reduce-form", "Gauss reduced form for D < 0");
    rf->add_option("form", list, "a,b,c")->required();

    auto* fc = app.add_subcommand("form-cycle", "cycle of reduced forms for D > 0");
    fc->add_option("form", list, "a,b,c")->required();

    auto* wd = app.add_subcommand("word", "generator word of a matrix, or the matrix of a word");
    wd->add_option("matrix", list, "a,b,c,d");
    wd->add_option("--basis", basis)->check(CLI::IsMember({"lr", "us", "ts"}));
    wd->add_option("--compose", text, "word to multiply out, e.g. \"-S R^1 L^5\"");

    auto* cs = app.add_subcommand("cutseq", "cutting sequence");
    cs->add_option("z", z)->required();
    cs->add_option("--max-steps", max_steps);

    auto* lc = app.add_subcommand("locate", "fan and Ford circle containing z");
    lc->add_option("z", z)->required();

    auto* sv = app.add_subcommand("render-svg", "static picture of the hourglass region");
    sv->add_option("--out", out_path);
    sv->add_option("--width", svg_width)->check(CLI::Range(100, 4000));

    // protect negative numbers from the flag parser
    std::vector<std::string> argv;
    for (const std::string& a : args) {
        argv.push_back(looks_numeric(a) ? " " + a : a);
    }
    auto unprotect = [](std::string& s) {
        if (s.size() > 1 && s[0] == ' ' && s[1] == '-') s.erase(0, 1);
    };

    try {
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        return {kOk, app.help()};
    } catch (const CLI::ParseError& e) {
        json j{{"status", "error"}, {"error", {{"code", "Usage"}, {"message", e.what()}}}, {"diagnostics", json::array()}};
        return {kUsage, j.dump() + "\n" + app.help()};
    }
    for (std::string* s : {&z, &w, &list, &coeffs, &tail, &text}) unprotect(*s);

    if (!batch.empty()) {
        return detail::run_batch(batch, jobs);
    }
    if (app.get_subcommands().empty()) {
        json j{{"status", "error"}, {"error", {{"code", "Usage"}, {"message", "no subcommand"}}}};
        return {kUsage, j.dump() + "\n" + app.help()};
    }
    const std::string name = app.get_subcommands().front()->get_name();

    json result;
    json diagnostics = json::array();
    try {
        if (name == "cf") {
            const ContinuedFraction c = cf_expand(parse_exact(z), parse_variant(variant), max_steps);
            result = cf_json(c);
            if (gprime) result["gprime"] = cf_json(to_gprime(c));
        } else if (name == "eval") {
            const ContinuedFraction c(parse_int_list(coeffs), parse_exact(tail));
            result = {{"value", format(cf_eval(c))}, {"canonical", is_canonical(c)}};
        } else if (name == "conj") {
            const ContinuedFraction c = cf_expand(parse_exact(z), parse_variant(variant), max_steps);
            result = cf_json(conjugate_cf(c));
        } else if (name == "serret") {
            const QuadElem a = parse_exact(z), b = parse_exact(w);
            result = {{"equivalent", serret_equivalent(a, b)},
                      {"tails", json::array({format(cf_expand(a).tail()), format(cf_expand(b).tail())})}};
        } else if (name == "reduce-lattice") {
            const Basis b{parse_exact(z), parse_exact(w)};
            auto put = [&](const QuadElem& u, const QuadElem& v) {
                result = {{"u", format(u)}, {"v", format(v)}, {"lengths2", {u.abs2().get_str(), v.abs2().get_str()}}};
            };
            if (gauss) {
                const auto [u, v] = classic_gauss_step_reduce(b);
                put(u, v);
            } else {
                const ReducedBasis r = reduce_basis(b);
                put(r.u, r.v);
                result["M"] = mat_json(r.M);
            }
        } else if (name == "reduce-form") {
            const auto v = parse_int_list(list, 3);
            const FormReduction r = reduce_negative({v[0], v[1], v[2]});
            result = {{"form", form_json(r.p)}, {"M", mat_json(r.M)}};
        } else if (name == "form-cycle") {
            const auto v = parse_int_list(list, 3);
            json cyc = json::array();
            for (const QForm& q : reduce_cycle_positive({v[0], v[1], v[2]})) cyc.push_back(form_json(q));
            result = {{"cycle", cyc}};
        } else if (name == "word") {
            const WordBasis wb = basis == "us" ? WordBasis::US : basis == "ts" ? WordBasis::TS : WordBasis::LR;
            if (!text.empty()) {
                const GenWord g = parse_word(text, wb);
                result = {{"word", format_word(g)}, {"matrix", mat_json(compose(g))}};
            } else if (!list.empty()) {
                const auto v = parse_int_list(list, 4);
                const GenWord g = word_decompose(Mat2(v[0], v[1], v[2], v[3]), wb);
                result = {{"word", format_word(g)}, {"basis", basis}};
            } else {
                json j{{"status", "error"}, {"error", {{"code", "Usage"}, {"message", "word needs a matrix or --compose"}}}};
                return {kUsage, j.dump() + "\n"};
            }
        } else if (name == "cutseq") {
            QuadElem q = parse_exact(z);
            Integer shift = 0;
            // the descent needs Re > 0
            const bool surd = q.radicand() > 0;
            if (surd ? compare_real(q, Rational(0)) <= 0 : q.re() <= 0) {
                // ceil(-Re) + 1 = 1 - floor(Re)
                shift = 1 - (surd ? floor_real(q) : floor_of(q.re()));
                q = q + QuadElem(shift);
                diagnostics.push_back("shifted by " + shift.get_str() + " to reach Re > 0");
            }
            const CuttingSequence c = cutting_sequence(q, max_steps);
            result = {{"cutseq", {{"exps", ints_json(c.exps)}, {"terminal", std::string(terminal_name(c.terminal))}}},
                      {"shift", int_json(shift)}};
        } else if (name == "locate") {
            const QuadElem q = parse_exact(z);
            const auto ford = locate_ford_circle(q);
            result = {{"fan", locate_fan(q).str()}, {"ford", ford ? json(ford->str()) : json(nullptr)}};
        } else if (name == "render-svg") {
            const std::string svg = detail::render_svg(svg_width);
            if (!out_path.empty()) {
                std::ofstream(out_path) << svg;
                result = {{"path", out_path}};
            } else if (plain) {
                return {kOk, svg};
            } else {
                result = {{"svg", svg}};
            }
        }
    } catch (const Error& e) {
        json j{{"status", "error"},
               {"command", name},
               {"error", {{"code", std::string(error_name(e.code()))}, {"message", e.what()}}},
               {"diagnostics", diagnostics}};
        if (plain) return {kDomain, std::string("error ") + e.what() + "\n"};
        return {kDomain, j.dump() + "\n"};
    }

    if (plain) {
        std::string s = plain_text(result);
        for (const auto& d : diagnostics) s += "note: " + d.get<std::string>() + "\n";
        return {kOk, s};
    }
    json j{{"status", "ok"}, {"command", name}, {"result", result}, {"diagnostics", diagnostics}};
    return {kOk, j.dump() + "\n"};
}

} // namespace ccfrac::cli

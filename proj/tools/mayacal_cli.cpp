// Copyright 2026 The mayacal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// mayacal command-line tool. Talks to the library only through mayacal.h.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mayacal/mayacal.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

// A failed library call, carried up to main() and rendered as an error envelope.
struct CliError : std::runtime_error {
    CliError(std::string message, std::string kind = {}, int64_t offset = -1)
        : std::runtime_error(std::move(message)), kind(std::move(kind)), offset(offset) {}
    std::string kind;
    int64_t offset;
};

void check(mayacal_status s) {
    if (s != MAYACAL_OK) {
        const int64_t offset = s == MAYACAL_E_PARSE ? mayacal_last_error_offset() : -1;
        std::string kind = s == MAYACAL_E_PARSE ? mayacal_last_error_kind() : mayacal_status_name(s);
        throw CliError(mayacal_last_error(), std::move(kind), offset);
    }
}

struct ExprDeleter {
    void operator()(mayacal_expr *e) const { mayacal_expr_free(e); }
};
struct ReportDeleter {
    void operator()(mayacal_report *r) const { mayacal_report_free(r); }
};
struct LunarListDeleter {
    void operator()(mayacal_lunar_list *l) const { mayacal_lunar_list_free(l); }
};
using Expr = std::unique_ptr<mayacal_expr, ExprDeleter>;
using ReportPtr = std::unique_ptr<mayacal_report, ReportDeleter>;
using LunarList = std::unique_ptr<mayacal_lunar_list, LunarListDeleter>;

// Runs a snprintf-style library call twice: once to size, once to fill.
template <typename F>
std::string read_string(F &&call) {
    size_t len = 0;
    const mayacal_status s = call(nullptr, 0, &len);
    if (s != MAYACAL_OK && s != MAYACAL_E_BUFFER_TOO_SMALL) {
        check(s);
    }
    std::string out(len + 1, '\0');
    check(call(out.data(), out.size(), &len));
    out.resize(len);
    return out;
}

std::string rational_str(mayacal_rational r) {
    return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::string decimal_str(mayacal_rational r, int places) {
    return read_string([&](char *b, size_t c, size_t *l) { return mayacal_rational_decimal(r, places, b, c, l); });
}

int64_t round_nearest(mayacal_rational r) {
    int64_t out = 0;
    check(mayacal_round_nearest(r, &out));
    return out;
}

mayacal_rational parse_rational(const std::string &text) {
    mayacal_rational r{};
    check(mayacal_rational_parse(text.c_str(), &r));
    return r;
}

std::optional<int64_t> parse_int(std::string_view text) {
    int64_t v = 0;
    const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || p != text.data() + text.size()) {
        return std::nullopt;
    }
    return v;
}

Expr parse_expr(const std::string &text) {
    mayacal_expr *e = nullptr;
    check(mayacal_expr_parse(text.c_str(), &e));
    return Expr(e);
}

std::string format_expr(const mayacal_expr *e, mayacal_style style) {
    return read_string([&](char *b, size_t c, size_t *l) { return mayacal_expr_format(e, style, b, c, l); });
}

std::string format_day(int64_t day, mayacal_style style) {
    mayacal_expr *e = nullptr;
    check(mayacal_expr_from_day(day, &e));
    Expr owned(e);
    return format_expr(owned.get(), style);
}

std::string long_count_str(const mayacal_long_count &lc) {
    std::ostringstream os;
    os << lc.baktun << '.' << lc.katun << '.' << lc.tun << '.' << lc.winal << '.' << lc.kin;
    return os.str();
}

std::string tzolkin_str(mayacal_tzolkin t) {
    return std::to_string(t.number) + " " + mayacal_tzolkin_name(t.name_index);
}
std::string haab_str(mayacal_haab h) { return std::to_string(h.day) + " " + mayacal_haab_month_name(h.month_index); }
std::string kawil_str(mayacal_kawil k) {
    return std::to_string(k.count) + " " + mayacal_direction_color_name(k.direction_color);
}

// {Tzolk'in position; Haab' position; Kawil count; direction-color}
std::string positions_str(const mayacal_cycle_date &d) {
    return "{" + std::to_string(d.tzolkin_pos) + ", " + std::to_string(d.haab_pos) + ", " +
           std::to_string(d.kawil.count) + ", " + std::to_string(d.kawil.direction_color) + "}";
}

mayacal_cycle_date cycle_date(int64_t day) {
    mayacal_cycle_date d{};
    check(mayacal_cycle_date_of(day, &d));
    return d;
}

json civil_json(int64_t jdn, mayacal_calendar cal) {
    mayacal_civil_date c{};
    check(mayacal_jdn_to_civil(jdn, cal, &c));
    json j;
    j["iso"] = read_string([&](char *b, size_t n, size_t *l) { return mayacal_civil_iso(&c, b, n, l); });
    j["display"] = read_string([&](char *b, size_t n, size_t *l) { return mayacal_civil_display(&c, b, n, l); });
    return j;
}

mayacal_constants constants() {
    mayacal_constants c{};
    check(mayacal_derive_constants(nullptr, &c));
    return c;
}

// Named cycle lengths a day number coincides with.
json identify(int64_t day) {
    const auto c = constants();
    const std::vector<std::pair<int64_t, std::string>> named = {
        {0, "creation"},
        {c.CR, "Calendar Round"},
        {c.kawil4, "4-Kawil"},
        {c.LR, "Long Round"},
        {c.X[0], "Xultun number X0"},
        {c.X[1], "Xultun number X1"},
        {c.X[2], "Xultun number X2"},
        {c.X[3], "Xultun number X3"},
        {5 * c.X[0], "5 X0, Itza prophecy"},
        {c.E, "Maya Era (13 baktun)"},
        {c.A, "Maya Aeon"},
        {5 * c.A, "5 Maya Aeon"},
        {c.GC, "grand cycle"},
        {c.N, "calendar super-number"},
    };
    json out = json::array();
    for (const auto &[value, name] : named) {
        if (day == value) {
            out.push_back(name);
        }
    }
    return out;
}

// ---------------------------------------------------------------- envelope

struct Envelope {
    std::string command;
    json payload = json::object();
    json checks = json::array();
    std::optional<CliError> error;

    void add_check(std::string name, std::string expected, std::string computed) {
        const bool pass = expected == computed;
        add_check(std::move(name), std::move(expected), std::move(computed), pass);
    }

    void add_check(std::string name, std::string expected, std::string computed, bool pass) {
        checks.push_back({{"name", std::move(name)},
                          {"expected", std::move(expected)},
                          {"computed", std::move(computed)},
                          {"pass", pass}});
    }

    std::string status() const {
        if (error) {
            return "error";
        }
        const bool all = std::all_of(checks.begin(), checks.end(), [](const json &c) { return c["pass"].get<bool>(); });
        return all ? "ok" : "mismatch";
    }

    int exit_code() const {
        const auto s = status();
        return s == "ok" ? kExitOk : s == "mismatch" ? kExitMismatch : kExitUsage;
    }

    json to_json() const {
        json j;
        j["command"] = command;
        j["status"] = status();
        if (error) {
            json e;
            e["message"] = error->what();
            e["kind"] = error->kind;
            if (error->offset >= 0) {
                e["offset"] = error->offset;
            }
            j["error"] = e;
        }
        j["payload"] = payload;
        j["checks"] = checks;
        return j;
    }
};

std::string scalar_text(const json &v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_array()) {
        if (v.empty()) {
            return "-";
        }
        std::string out;
        for (const auto &x : v) {
            out += (out.empty() ? "" : ", ") + scalar_text(x);
        }
        return out;
    }
    if (v.is_object()) {
        std::string out;
        for (const auto &[k, x] : v.items()) {
            out += (out.empty() ? "" : ", ") + k + "=" + scalar_text(x);
        }
        return out;
    }
    return v.dump();
}

bool is_table(const json &v) {
    return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json &r) { return r.is_object(); });
}

void render_table(std::ostream &os, const json &rows, const std::string &indent) {
    std::vector<std::string> cols;
    for (const auto &[k, _] : rows.front().items()) {
        cols.push_back(k);
    }
    std::vector<std::vector<std::string>> cells;
    std::vector<size_t> width(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) {
        width[i] = cols[i].size();
    }
    for (const auto &r : rows) {
        auto &line = cells.emplace_back();
        for (size_t i = 0; i < cols.size(); ++i) {
            line.push_back(r.contains(cols[i]) ? scalar_text(r[cols[i]]) : "");
            width[i] = std::max(width[i], line.back().size());
        }
    }
    auto emit = [&](const std::vector<std::string> &line) {
        std::string out = indent;
        for (size_t i = 0; i < line.size(); ++i) {
            out += line[i];
            if (i + 1 < line.size()) {
                out += std::string(width[i] - line[i].size() + 2, ' ');
            }
        }
        os << out << '\n';
    };
    emit(cols);
    for (const auto &line : cells) {
        emit(line);
    }
}

void render_object(std::ostream &os, const json &obj, const std::string &indent) {
    for (const auto &[key, v] : obj.items()) {
        if (v.is_object() && !v.empty()) {
            os << indent << key << ":\n";
            render_object(os, v, indent + "  ");
        } else if (is_table(v)) {
            os << indent << key << ":\n";
            render_table(os, v, indent + "  ");
        } else {
            os << indent << key << ": " << scalar_text(v) << '\n';
        }
    }
}

void render_text(std::ostream &os, const Envelope &env) {
    os << env.command << ": " << env.status() << '\n';
    if (env.error) {
        os << "error: " << env.error->what() << '\n';
        if (env.error->offset >= 0) {
            os << "offset: " << env.error->offset << '\n';
        }
    }
    render_object(os, env.payload, "  ");
    if (!env.checks.empty()) {
        size_t passed = 0;
        for (const auto &c : env.checks) {
            const bool ok = c["pass"].get<bool>();
            passed += ok ? 1 : 0;
            os << (ok ? "PASS " : "FAIL ") << c["name"].get<std::string>() << ": " << c["computed"].get<std::string>();
            if (!ok) {
                os << " (expected " << c["expected"].get<std::string>() << ")";
            }
            os << '\n';
        }
        os << passed << "/" << env.checks.size() << " checks passed\n";
    }
}

// ---------------------------------------------------------------- commands

struct Options {
    std::string format = "text";
    int64_t correlation = MAYACAL_GMT_CORRELATION;
};

json describe_day(int64_t day, const Options &opt) {
    const auto d = cycle_date(day);
    json j;
    j["day"] = day;
    j["long_count"] = long_count_str(d.long_count);
    j["tzolkin"] = tzolkin_str(d.tzolkin);
    j["haab"] = haab_str(d.haab);
    j["kawil"] = d.kawil.count;
    j["direction_color"] = mayacal_direction_color_name(d.kawil.direction_color);
    j["positions"] = positions_str(d);
    j["formatted"] = format_day(day, MAYACAL_STYLE_PLAIN) + ", " + kawil_str(d.kawil);
    j["annotated"] = format_day(day, MAYACAL_STYLE_ANNOTATED) + ", " + kawil_str(d.kawil);
    j["identification"] = identify(day);
    int64_t jdn = 0;
    check(mayacal_to_jdn(day, opt.correlation, &jdn));
    j["correlation"] = opt.correlation;
    j["jdn"] = jdn;
    j["gregorian"] = civil_json(jdn, MAYACAL_GREGORIAN);
    j["julian"] = civil_json(jdn, MAYACAL_JULIAN);
    return j;
}

struct Window {
    int64_t lo = 0;
    int64_t hi = 0;
};

Window parse_window(const std::string &text) {
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const auto lo = parse_int(std::string_view(text).substr(0, dots));
        const auto hi = parse_int(std::string_view(text).substr(dots + 2));
        if (lo && hi) {
            return {*lo, *hi};
        }
    }
    throw CliError("window must look like LO..HI, got '" + text + "'", "usage");
}

std::vector<int64_t> resolve(const mayacal_expr *e, Window w, bool &inconsistent) {
    size_t count = 0;
    int32_t flag = 0;
    const mayacal_status s = mayacal_expr_resolve(e, w.lo, w.hi, nullptr, 0, &count, &flag);
    if (s != MAYACAL_OK && s != MAYACAL_E_BUFFER_TOO_SMALL) {
        check(s);
    }
    std::vector<int64_t> days(count);
    check(mayacal_expr_resolve(e, w.lo, w.hi, days.data(), days.size(), &count, &flag));
    inconsistent = flag != 0;
    return days;
}

void cmd_convert(Envelope &env, const Options &opt, const std::string &input, std::optional<int64_t> day_flag,
                 const std::string &window_text) {
    if (day_flag) {
        env.payload["input"] = std::to_string(*day_flag);
        env.payload["result"] = describe_day(*day_flag, opt);
        return;
    }
    if (input.empty()) {
        throw CliError("convert needs a date or --day", "usage");
    }
    env.payload["input"] = input;
    if (const auto day = parse_int(input)) {
        env.payload["result"] = describe_day(*day, opt);
        return;
    }
    const Expr expr = parse_expr(input);
    mayacal_expr_fields f{};
    check(mayacal_expr_get(expr.get(), &f));

    if (f.has_long_count) {
        int64_t day = 0;
        check(mayacal_day_from_long_count(&f.long_count, &day));
        auto result = describe_day(day, opt);
        // Every other component given must agree with the Long Count.
        const auto d = cycle_date(day);
        if (f.has_tzolkin) {
            env.add_check("Tzolk'in", tzolkin_str(f.tzolkin), tzolkin_str(d.tzolkin));
        }
        if (f.has_haab) {
            env.add_check("Haab'", haab_str(f.haab), haab_str(d.haab));
        }
        if (f.has_kawil) {
            env.add_check("Kawil", kawil_str(f.kawil), kawil_str(d.kawil));
        }
        env.payload["result"] = result;
        return;
    }

    if (window_text.empty()) {
        throw CliError("a date without a Long Count needs --window LO..HI", "usage");
    }
    const Window w = parse_window(window_text);
    bool inconsistent = false;
    const auto days = resolve(expr.get(), w, inconsistent);
    env.payload["window"] = std::to_string(w.lo) + ".." + std::to_string(w.hi);
    env.payload["matches"] = days.size();
    json rows = json::array();
    for (const int64_t day : days) {
        const auto d = cycle_date(day);
        int64_t jdn = 0;
        check(mayacal_to_jdn(day, opt.correlation, &jdn));
        rows.push_back({{"day", day},
                        {"long_count", long_count_str(d.long_count)},
                        {"calendar_round", tzolkin_str(d.tzolkin) + " " + haab_str(d.haab)},
                        {"kawil", kawil_str(d.kawil)},
                        {"gregorian", civil_json(jdn, MAYACAL_GREGORIAN)["display"]}});
    }
    env.payload["days"] = rows;
}

void cmd_verify(Envelope &env, const std::string &scope) {
    mayacal_report *raw = nullptr;
    check(mayacal_verify(scope.c_str(), &raw));
    const ReportPtr report(raw);
    env.payload["scope"] = scope;
    const size_t n = mayacal_report_size(report.get());
    for (size_t i = 0; i < n; ++i) {
        mayacal_check c{};
        check(mayacal_report_check(report.get(), i, &c));
        env.add_check(std::string(c.suite) + ": " + c.name, c.expected, c.computed, c.pass != 0);
    }
    env.payload["checks_run"] = n;
}

std::vector<mayacal_lunar_candidate> list_rows(const LunarList &list) {
    std::vector<mayacal_lunar_candidate> rows(mayacal_lunar_list_size(list.get()));
    for (size_t i = 0; i < rows.size(); ++i) {
        check(mayacal_lunar_list_get(list.get(), i, &rows[i]));
    }
    return rows;
}

void cmd_lunar_table(Envelope &env) {
    mayacal_constants c = constants();
    mayacal_lunar_list *raw = nullptr;
    check(mayacal_lunar_table(c.N, &raw));
    const LunarList list(raw);
    json rows = json::array();
    for (const auto &r : list_rows(list)) {
        const bool modern = (r.flags & MAYACAL_LUNAR_MODERN) != 0;
        rows.push_back({{"source", r.source},
                        {"T", modern ? json("-") : json(r.T)},
                        {"L", modern ? json("-") : json(r.L)},
                        {"S", decimal_str(r.S, 6)},
                        {"epsilon", rational_str(r.epsilon)},
                        {"epsilon_decimal", decimal_str(r.epsilon, 4)},
                        {"Rd(epsilon)", round_nearest(r.epsilon)},
                        {"LCM(260,T)", modern ? json("-") : json(r.lcm260)}});
    }
    env.payload["N"] = c.N;
    env.payload["rows"] = rows;
}

void cmd_lunar_search(Envelope &env, int max_lunations, const std::string &ratio, bool all) {
    const auto reference = parse_rational(ratio);
    mayacal_constants c = constants();
    mayacal_lunar_list *raw = nullptr;
    check(mayacal_lunar_search(c.N, reference, max_lunations, all ? 1 : 0, &raw));
    const LunarList list(raw);
    const auto rows = list_rows(list);

    json out = json::array();
    json zero = json::array();
    json pareto = json::array();
    std::string best = "-";
    for (const auto &r : rows) {
        const auto S = std::to_string(r.T) + "/" + std::to_string(r.L);
        std::string flags;
        auto flag = [&](int bit, const char *name) {
            if ((r.flags & bit) != 0) {
                flags += (flags.empty() ? "" : ",") + std::string(name);
            }
        };
        flag(MAYACAL_LUNAR_WITHIN_CR, "cr");
        flag(MAYACAL_LUNAR_ZERO_ERROR, "zero");
        flag(MAYACAL_LUNAR_PARETO, "pareto");
        flag(MAYACAL_LUNAR_BEST, "best");
        if ((r.flags & MAYACAL_LUNAR_ZERO_ERROR) != 0 && (r.flags & MAYACAL_LUNAR_WITHIN_CR) != 0) {
            zero.push_back(S);
        }
        if ((r.flags & MAYACAL_LUNAR_PARETO) != 0) {
            pareto.push_back(S);
        }
        if ((r.flags & MAYACAL_LUNAR_BEST) != 0) {
            best = S;
        }
        out.push_back({{"L", r.L},
                       {"T", r.T},
                       {"S", decimal_str(r.S, 6)},
                       {"epsilon", rational_str(r.epsilon)},
                       {"distance", decimal_str(r.distance, 6)},
                       {"LCM(260,T)", r.lcm260},
                       {"flags", flags.empty() ? "-" : flags}});
    }
    env.payload["reference"] = decimal_str(reference, 6);
    env.payload["max_lunations"] = max_lunations;
    env.payload["candidates"] = rows.size();
    env.payload["best"] = best;
    env.payload["zero_error"] = zero;
    env.payload["pareto"] = pareto;
    env.payload["rows"] = out;
}

int64_t day_of(const std::string &text) {
    if (const auto day = parse_int(text)) {
        return *day;
    }
    const Expr e = parse_expr(text);
    mayacal_expr_fields f{};
    check(mayacal_expr_get(e.get(), &f));
    if (!f.has_long_count) {
        throw CliError("'" + text + "' has no Long Count", "usage");
    }
    int64_t day = 0;
    check(mayacal_day_from_long_count(&f.long_count, &day));
    return day;
}

void cmd_lunar_age(Envelope &env, const std::string &lc, const std::string &lc0, const std::string &ratio) {
    const auto S = parse_rational(ratio);
    const int64_t day = day_of(lc);
    const int64_t day0 = day_of(lc0);
    mayacal_rational age{};
    check(mayacal_moon_age(day, day0, S, &age));
    env.payload["lc"] = day;
    env.payload["lc0"] = day0;
    env.payload["ratio"] = rational_str(S);
    env.payload["age"] = rational_str(age);
    env.payload["age_decimal"] = decimal_str(age, 4);
}

void cmd_factor(Envelope &env, const std::string &text) {
    const auto n = parse_int(text);
    if (!n || *n < 1) {
        throw CliError("factor needs an integer in 1..9223372036854775807, got '" + text + "'", "out_of_range");
    }
    size_t count = 0;
    std::vector<mayacal_prime_power> factors(64);
    check(mayacal_factorize(*n, factors.data(), factors.size(), &count));
    factors.resize(count);
    std::string rendered;
    json list = json::array();
    for (const auto &f : factors) {
        rendered += (rendered.empty() ? "" : " × ") + std::to_string(f.prime);
        if (f.multiplicity > 1) {
            rendered += "^" + std::to_string(f.multiplicity);
        }
        list.push_back({{"prime", f.prime}, {"multiplicity", f.multiplicity}});
    }
    env.payload["n"] = *n;
    env.payload["factorization"] = rendered.empty() ? "1" : rendered;
    env.payload["factors"] = list;
}

void cmd_cultural_dates(Envelope &env, const Options &opt) {
    const auto c = constants();
    mayacal_cultural_date rows[MAYACAL_CULTURAL_DATE_COUNT];
    check(mayacal_cultural_dates(&c, rows));
    json out = json::array();
    for (const auto &r : rows) {
        const auto &d = r.date;
        int64_t jdn = 0;
        check(mayacal_to_jdn(d.day, opt.correlation, &jdn));
        out.push_back({{"label", r.label},
                       {"day", d.day},
                       {"long_count", long_count_str(d.long_count)},
                       {"calendar_round", tzolkin_str(d.tzolkin) + " " + haab_str(d.haab)},
                       {"kawil", kawil_str(d.kawil)},
                       {"{T; H; K; n}", positions_str(d)},
                       {"description", r.description}});
    }
    env.payload["rows"] = out;
}

void emit(const Envelope &env, const Options &opt) {
    if (opt.format == "json") {
        std::cout << env.to_json().dump(2) << '\n';
    } else if (env.error) {
        render_text(std::cerr, env);
    } else {
        render_text(std::cout, env);
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact-arithmetic Mayan calendar tool"};
    app.require_subcommand(1);
    app.fallthrough(); // inherited by subcommands, so global flags may follow them
    app.set_version_flag("--version", std::string(mayacal_version()));

    Options opt;
    app.add_option("--format", opt.format, "Output format (env MAYACAL_FORMAT; the flag wins)")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("MAYACAL_FORMAT")
        ->capture_default_str();
    app.add_option("--correlation", opt.correlation, "Julian Day Number of day 0")->capture_default_str();

    std::string convert_input;
    std::optional<int64_t> convert_day;
    std::string convert_window;
    auto *convert = app.add_subcommand("convert", "Convert a date expression or day number");
    convert->add_option("date", convert_input, "Long Count and/or Calendar Round, Kawil, or a day number");
    convert->add_option("--day", convert_day, "Day number since creation");
    convert->add_option("--window", convert_window, "Inclusive day window LO..HI for dates without a Long Count");

    std::vector<std::string> scopes;
    for (size_t i = 0; i < mayacal_verify_scope_count(); ++i) {
        scopes.emplace_back(mayacal_verify_scope_name(i));
    }
    std::string verify_scope = "all";
    auto *verify = app.add_subcommand("verify", "Check the calendar identities");
    verify->add_option("scope", verify_scope, "Suite to run")->check(CLI::IsMember(scopes))->capture_default_str();

    auto *lunar = app.add_subcommand("lunar", "Lunar ratios");
    lunar->require_subcommand(1);
    auto *lunar_table = lunar->add_subcommand("table", "Lunar-table lengths with their errors");
    int max_lunations = 643;
    std::string search_ratio = "29.530588";
    bool search_all = false;
    auto *lunar_search = lunar->add_subcommand("search", "Search T/L ratios for i = 1..max lunations");
    lunar_search->add_option("--max", max_lunations, "Largest lunation count")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();
    lunar_search->add_option("--ratio", search_ratio, "Reference synodic month")->capture_default_str();
    lunar_search->add_flag("--all", search_all, "List every lunation count, not only those within one Calendar Round");
    std::string age_lc;
    std::string age_lc0 = "0.0.0.0.0";
    std::string age_ratio = "2392/81";
    auto *lunar_age = lunar->add_subcommand("age", "Moon age of a date");
    lunar_age->add_option("--lc", age_lc, "Long Count or day number")->required();
    lunar_age->add_option("--lc0", age_lc0, "Reference new Moon")->capture_default_str();
    lunar_age->add_option("--ratio", age_ratio, "Moon ratio S = T/L")->capture_default_str();

    std::string factor_n;
    auto *factor = app.add_subcommand("factor", "Prime factorization");
    factor->add_option("n", factor_n, "Integer in 1..2^63-1")->required();

    auto *table = app.add_subcommand("table", "Reference tables");
    table->require_subcommand(1);
    auto *cultural = table->add_subcommand("cultural-dates", "Creation, 5 X0, Era, 5 Aeon and grand cycle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    Envelope env;
    try {
        if (*convert) {
            env.command = "convert";
            cmd_convert(env, opt, convert_input, convert_day, convert_window);
        } else if (*verify) {
            env.command = "verify";
            cmd_verify(env, verify_scope);
        } else if (*lunar_table) {
            env.command = "lunar table";
            cmd_lunar_table(env);
        } else if (*lunar_search) {
            env.command = "lunar search";
            cmd_lunar_search(env, max_lunations, search_ratio, search_all);
        } else if (*lunar_age) {
            env.command = "lunar age";
            cmd_lunar_age(env, age_lc, age_lc0, age_ratio);
        } else if (*factor) {
            env.command = "factor";
            cmd_factor(env, factor_n);
        } else if (*cultural) {
            env.command = "table cultural-dates";
            cmd_cultural_dates(env, opt);
        }
    } catch (const CliError &e) {
        env.error = e;
    }
    emit(env, opt);
    return env.exit_code();
}

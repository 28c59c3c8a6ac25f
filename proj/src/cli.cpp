#include "gesh/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "gesh/expression.hpp"
#include "gesh/geometry.hpp"
#include "gesh/metrology.hpp"

namespace gesh {

namespace {

using nlohmann::ordered_json;

ordered_json rational_json(const Rational& r) {
    return {{"num", r.num().str()}, {"den", r.den().str()}};
}

// Sexagesimal string, or null when the expansion does not terminate.
ordered_json sexagesimal_json(const Rational& r) {
    try {
        return format_sexagesimal(from_rational(r).value);
    } catch (const NonTerminating&) {
        return nullptr;
    }
}

void dump(const ordered_json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

// Number arguments accept an integer, fraction, exact decimal, or a strict
// sexagesimal literal.
Rational parse_number(const std::string& text) {
    try {
        return Rational::from_string(text);
    } catch (const Error&) {
        return to_rational(parse_sexagesimal(text));
    }
}

Rational parse_pi_option(const std::string& text) {
    if (text == "babylonian3") return Rational(3);
    if (text == "babylonian25_8") return Rational(25, 8);
    return parse_number(text);
}

FormatStyle style_from_name(const std::string& name) {
    return name == "floating" ? FormatStyle::Floating : FormatStyle::Canonical;
}

RoundingMode mode_from_name(const std::string& name) {
    if (name == "half-up") return RoundingMode::HalfUp;
    if (name == "half-even") return RoundingMode::HalfEven;
    if (name == "floor") return RoundingMode::Floor;
    if (name == "ceiling") return RoundingMode::Ceiling;
    return RoundingMode::Truncate;
}

// A `--floating` declaration promises point-free input.
void check_point_free(const std::string& text) {
    if (text.find(';') != std::string::npos)
        throw PolicyError("input declared floating (point-free) but contains ';': \"" +
                          text + "\"");
}

std::string factor_label(const SmoothFactorization& f) {
    std::string s;
    auto piece = [&s](int prime, int exponent) {
        if (exponent == 0) return;
        if (!s.empty()) s += "*";
        s += std::to_string(prime);
        if (exponent > 1) s += "^" + std::to_string(exponent);
    };
    piece(2, f.two);
    piece(3, f.three);
    piece(5, f.five);
    return s.empty() ? "1" : s;
}

// "label: <canonical sexagesimal>[ unit] (= p/q)"
void print_value_line(std::ostream& out, const char* label, const Rational& v,
                      const char* unit = nullptr) {
    out << label << ": " << format_sexagesimal(from_rational(v).value);
    if (unit) out << " " << unit;
    out << " (= " << v.to_string() << ")\n";
}

// Everything each subcommand collects from its flags.
struct Options {
    OutputFormat output = OutputFormat::Text;
    std::string output_name = "text";

    std::string text;  // the positional argument, where one exists
    std::string format_name = "canonical";
    bool floating = false;
    std::optional<long long> assume_point;
    std::optional<int> max_digits;
    bool require_regular = false;

    std::vector<std::string> families;
    int n_max = 30;
    std::string igi_style_name = "canonical";
    std::string out_path;

    std::string lo = "3";
    std::string hi = "16/5";
    int max_exponent = 13;
    std::string pi_ref = "314159265358979/100000000000000";
    int top = 0;

    std::string diameter, circumference, pi, height;
    std::string inner, wall = "0 nindan";
    int places = 1;
    std::string mode_name = "half-up";

    std::string to_unit;
    bool mixed = false;
    bool metric = false;
    int decimals = 1;
};

void run_parse(const Options& o, std::ostream& out) {
    Sexagesimal x;
    if (o.assume_point) {
        x = parse_sexagesimal(o.text, ParsePolicy::floating(*o.assume_point));
    } else {
        if (o.floating) check_point_free(o.text);
        x = parse_sexagesimal(o.text);
    }
    std::string rendered = format_sexagesimal(x, style_from_name(o.format_name));
    if (o.output == OutputFormat::Json) {
        ordered_json j;
        j["input"] = o.text;
        j["rational"] = rational_json(to_rational(x));
        j["sexagesimal"] = rendered;
        dump(j, out);
    } else {
        out << rendered << "\n";
    }
}

void run_eval(const Options& o, std::ostream& out) {
    EvalResult r = evaluate_expression(o.text, o.max_digits);
    FormatStyle style = style_from_name(o.format_name);
    if (o.output == OutputFormat::Json) {
        ordered_json j;
        j["input"] = o.text;
        j["rational"] = rational_json(r.value);
        j["sexagesimal"] =
            r.sexagesimal ? ordered_json(format_sexagesimal(*r.sexagesimal, style)) : nullptr;
        j["terminates"] = r.sexagesimal.has_value();
        if (r.truncated) j["truncated"] = format_sexagesimal(*r.truncated, style);
        dump(j, out);
        return;
    }
    if (r.sexagesimal) {
        out << format_sexagesimal(*r.sexagesimal, style) << "\n";
    } else if (r.truncated) {
        out << format_sexagesimal(*r.truncated, style) << " (truncated; exact value "
            << r.value.to_string() << " has no terminating expansion)\n";
    } else {
        throw NonTerminating("result " + r.value.to_string() +
                             " has no terminating sexagesimal expansion "
                             "(pass --max-digits N for a truncated one)");
    }
}

void run_recip(const Options& o, std::ostream& out) {
    if (o.floating) check_point_free(o.text);
    Rational v = parse_number(o.text);
    Sexagesimal g = igi(v);
    std::string rendered = format_sexagesimal(g, style_from_name(o.format_name));
    if (o.output == OutputFormat::Json) {
        ordered_json j;
        j["input"] = o.text;
        j["value"] = rational_json(v);
        j["rational"] = rational_json(to_rational(g));
        j["sexagesimal"] = rendered;
        dump(j, out);
    } else {
        out << rendered << "\n";
    }
}

void run_regular(const Options& o, std::ostream& out) {
    Rational v = parse_number(o.text);
    Regularity reg = is_regular(v);
    if (o.require_regular && !reg.value_regular)
        throw Irregular(v.to_string() + " is not regular: " +
                        (reg.expansion_terminates ? "its reciprocal has no terminating expansion"
                                                  : "its expansion does not terminate"));
    bool reciprocal_terminates = is_smooth(v.num());
    std::optional<SmoothFactorization> factors;
    if (v.is_integer() && !v.is_negative() && reg.value_regular)
        factors = factor_smooth(v.num());

    if (o.output == OutputFormat::Json) {
        ordered_json j;
        j["input"] = o.text;
        j["rational"] = rational_json(v);
        j["sexagesimal"] = sexagesimal_json(v);
        j["value_regular"] = reg.value_regular;
        j["expansion_terminates"] = reg.expansion_terminates;
        j["reciprocal_terminates"] = reciprocal_terminates;
        j["factorization"] =
            factors ? ordered_json{{"two", factors->two},
                                   {"three", factors->three},
                                   {"five", factors->five}}
                    : ordered_json(nullptr);
        dump(j, out);
        return;
    }
    auto yesno = [](bool b) { return b ? "yes" : "no"; };
    out << "value: " << v.to_string() << "\n";
    if (factors) out << "factorization: " << factor_label(*factors) << "\n";
    ordered_json sex = sexagesimal_json(v);
    out << "sexagesimal: " << (sex.is_null() ? "(does not terminate)" : sex.get<std::string>())
        << "\n";
    out << "expansion terminates: " << yesno(reg.expansion_terminates) << "\n";
    out << "reciprocal terminates: " << yesno(reciprocal_terminates) << "\n";
    out << "regular: " << yesno(reg.value_regular) << "\n";
}

void run_table(const Options& o, std::ostream& out) {
    std::vector<ReciprocalFamily> families;
    if (o.families.empty()) {
        families = default_families();
    } else {
        for (const auto& spec : o.families) families.push_back(family_from_spec(spec));
    }
    ReciprocalTable table = generate_reciprocal_table(families, o.n_max);
    OutputFormat format =
        o.output == OutputFormat::Text ? OutputFormat::Tsv : o.output;
    FormatStyle igi_style = style_from_name(o.igi_style_name);
    if (o.out_path.empty())
        export_table(table, format, out, igi_style);
    else
        export_table_file(table, format, o.out_path, igi_style);
}

void run_pi_search(const Options& o, std::ostream& out) {
    Rational lo = parse_number(o.lo);
    Rational hi = parse_number(o.hi);
    Rational pi_ref = parse_number(o.pi_ref);
    std::vector<PiCandidate> candidates = pi_candidates(lo, hi, o.max_exponent, pi_ref);
    if (o.top > 0 && candidates.size() > static_cast<size_t>(o.top))
        candidates.resize(static_cast<size_t>(o.top));

    if (o.output == OutputFormat::Json) {
        ordered_json j;
        j["lo"] = rational_json(lo);
        j["hi"] = rational_json(hi);
        j["max_exponent"] = o.max_exponent;
        j["pi_ref"] = rational_json(pi_ref);
        ordered_json entries = ordered_json::array();
        for (const auto& c : candidates) {
            entries.push_back({{"rational", rational_json(c.value)},
                               {"sexagesimal", format_sexagesimal(c.sexagesimal)},
                               {"abs_error", rational_json(c.abs_error)},
                               {"reciprocal_digit_count", c.reciprocal_digit_count},
                               {"two", c.two},
                               {"three", c.three},
                               {"five", c.five},
                               {"shift", c.shift}});
        }
        j["candidates"] = std::move(entries);
        dump(j, out);
        return;
    }
    for (const auto& c : candidates) {
        out << format_sexagesimal(c.sexagesimal) << "\t" << c.value.to_string()
            << "\terror " << c.abs_error.to_decimal_string(10) << "\tigi digits "
            << c.reciprocal_digit_count << "\t2^" << c.two << " 3^" << c.three << " 5^"
            << c.five << " 60^" << c.shift << "\n";
    }
}

void run_circle(const Options& o, std::ostream& out) {
    CircleSpec spec;
    if (!o.diameter.empty()) spec.diameter = parse_number(o.diameter);
    if (!o.circumference.empty()) spec.circumference = parse_number(o.circumference);
    PiModel model = pi_model(parse_pi_option(o.pi));
    CircleDims dims = resolve_circle(spec, model.pi);
    Rational area = area_from_circumference(dims.circumference, model.area_constant);
    std::optional<Rational> volume;
    if (!o.height.empty())
        volume = cylinder_volume(dims.circumference, parse_number(o.height),
                                 model.area_constant);

    if (o.output == OutputFormat::Json) {
        ordered_json j;
        j["pi"] = rational_json(model.pi);
        j["area_constant"] = {{"rational", rational_json(model.area_constant)},
                              {"sexagesimal", sexagesimal_json(model.area_constant)}};
        auto value = [](const Rational& r) {
            return ordered_json{{"rational", rational_json(r)},
                                {"sexagesimal", sexagesimal_json(r)}};
        };
        j["diameter"] = value(dims.diameter);
        j["circumference"] = value(dims.circumference);
        j["area"] = value(area);
        if (volume) j["volume"] = value(*volume);
        dump(j, out);
        return;
    }
    std::ostringstream buffer;
    print_value_line(buffer, "pi", model.pi);
    print_value_line(buffer, "area constant", model.area_constant);
    print_value_line(buffer, "diameter", dims.diameter, "nindan");
    print_value_line(buffer, "circumference", dims.circumference, "nindan");
    print_value_line(buffer, "area", area, "sar");
    if (volume) print_value_line(buffer, "volume", *volume, "nindan^3");
    out << buffer.str();
}

void run_plot(const Options& o, std::ostream& out) {
    PlotSpec spec{parse_length_quantity(o.inner), parse_length_quantity(o.wall)};
    Rational pi = parse_pi_option(o.pi);
    PlotReport report = plot_area(spec, pi, o.places, mode_from_name(o.mode_name));
    std::string mixed = format_mixed(report.area_mixed);

    if (o.output == OutputFormat::Json) {
        ordered_json j;
        j["input"] = {{"inner", o.inner}, {"wall", o.wall}, {"pi", pi.to_string()},
                      {"places", o.places}, {"mode", o.mode_name}};
        j["rational"] = rational_json(report.area_exact);
        j["sexagesimal"] = report.area_exact_sexagesimal;
        j["report"] = {
            {"outer_diameter",
             {{"rational", rational_json(report.outer_diameter)},
              {"sexagesimal", report.outer_diameter_sexagesimal}}},
            {"circumference",
             {{"rational", rational_json(report.circumference)},
              {"sexagesimal", report.circumference_sexagesimal}}},
            {"circumference_squared",
             {{"rational", rational_json(report.circumference_squared)},
              {"sexagesimal", report.circumference_squared_sexagesimal}}},
            {"area_exact",
             {{"rational", rational_json(report.area_exact)},
              {"sexagesimal", report.area_exact_sexagesimal}}},
            {"area_rounded",
             {{"rational", rational_json(report.area_rounded)},
              {"sexagesimal", report.area_rounded_sexagesimal}}},
            {"area_mixed",
             {{"sar", report.area_mixed.sar.str()},
              {"gin", rational_json(report.area_mixed.gin)},
              {"text", mixed}}},
        };
        dump(j, out);
        return;
    }
    std::ostringstream buffer;
    print_value_line(buffer, "pi", pi);
    print_value_line(buffer, "area constant", area_constant_from_pi(pi));
    buffer << "outer diameter: " << report.outer_diameter_sexagesimal << " nindan (= "
           << report.outer_diameter.to_string() << ")\n";
    buffer << "circumference: " << report.circumference_sexagesimal << " nindan (= "
           << report.circumference.to_string() << ")\n";
    buffer << "circumference squared: " << report.circumference_squared_sexagesimal
           << " (= " << report.circumference_squared.to_string() << ")\n";
    buffer << "area: " << report.area_exact_sexagesimal << " sar (= "
           << report.area_exact.to_string() << ")\n";
    buffer << "area rounded: " << report.area_rounded_sexagesimal << " sar (= "
           << report.area_rounded.to_string() << ")\n";
    buffer << mixed << "\n";
    out << buffer.str();
}

void run_units(const Options& o, std::ostream& out) {
    Quantity q = parse_quantity(o.text);
    bool is_length = q.dimension == Dimension::Length;
    std::string_view unit =
        is_length ? unit_name(q.length_unit) : unit_name(q.area_unit);

    std::optional<Rational> converted;
    std::string_view converted_unit;
    if (!o.to_unit.empty()) {
        if (auto lu = parse_length_unit(o.to_unit)) {
            if (!is_length)
                throw SyntaxError("cannot convert an area to " + o.to_unit);
            converted = convert(LengthQuantity{q.value, q.length_unit}, *lu);
            converted_unit = unit_name(*lu);
        } else if (auto au = parse_area_unit(o.to_unit)) {
            if (is_length)
                throw SyntaxError("cannot convert a length to " + o.to_unit);
            converted = convert(AreaQuantity{q.value, q.area_unit}, *au);
            converted_unit = unit_name(*au);
        } else {
            throw SyntaxError("unknown unit \"" + o.to_unit +
                              "\" (expected nindan, shudua, sar or gin)");
        }
    }
    std::optional<std::string> mixed;
    if (o.mixed)
        mixed = is_length
                    ? format_mixed(nindan_to_mixed(length_to_nindan(
                          LengthQuantity{q.value, q.length_unit})))
                    : format_mixed(sar_to_mixed(area_to_sar(AreaQuantity{q.value, q.area_unit})));
    std::optional<std::string> metric;
    if (o.metric)
        metric = is_length
                     ? metric_display(LengthQuantity{q.value, q.length_unit}, o.decimals)
                     : metric_display(AreaQuantity{q.value, q.area_unit}, o.decimals);

    if (o.output == OutputFormat::Json) {
        ordered_json j;
        j["input"] = o.text;
        j["rational"] = rational_json(q.value);
        j["sexagesimal"] = sexagesimal_json(q.value);
        j["unit"] = std::string(unit);
        j["dimension"] = is_length ? "length" : "area";
        if (converted)
            j["converted"] = {{"rational", rational_json(*converted)},
                              {"sexagesimal", sexagesimal_json(*converted)},
                              {"unit", std::string(converted_unit)}};
        if (mixed) j["mixed"] = *mixed;
        if (metric) j["metric"] = *metric;
        dump(j, out);
        return;
    }
    std::ostringstream buffer;
    if (converted) buffer << converted->to_string() << " " << converted_unit << "\n";
    if (mixed) buffer << *mixed << "\n";
    if (metric) buffer << *metric << "\n";
    if (!converted && !mixed && !metric)
        buffer << q.value.to_string() << " " << unit << "\n";
    out << buffer.str();
}

}  // namespace

void export_table(const ReciprocalTable& table, OutputFormat format, std::ostream& out,
                  FormatStyle igi_style) {
    if (format == OutputFormat::Json) {
        ordered_json j;
        ordered_json families = ordered_json::array();
        for (const auto& f : table.families) families.push_back(f.label());
        j["families"] = std::move(families);
        j["n_max"] = table.n_max;
        ordered_json entries = ordered_json::array();
        for (const auto& e : table.entries) {
            entries.push_back(
                {{"family", e.family},
                 {"index", e.index},
                 {"value_sexagesimal",
                  format_sexagesimal(from_rational(e.value).value, FormatStyle::Floating)},
                 {"value_decimal", e.value.to_decimal_string()},
                 {"igi_sexagesimal", format_sexagesimal(e.igi, igi_style)}});
        }
        j["entries"] = std::move(entries);
        dump(j, out);
        return;
    }
    out << "family\tindex\tvalue_sexagesimal\tvalue_decimal\tigi_sexagesimal\n";
    for (const auto& e : table.entries) {
        out << e.family << "\t" << e.index << "\t"
            << format_sexagesimal(from_rational(e.value).value, FormatStyle::Floating)
            << "\t" << e.value.to_decimal_string() << "\t"
            << format_sexagesimal(e.igi, igi_style) << "\n";
    }
}

void export_table_file(const ReciprocalTable& table, OutputFormat format,
                       const std::string& path, FormatStyle igi_style) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path + " for writing");
    export_table(table, format, file, igi_style);
    file.flush();
    if (!file) throw IoError("failed while writing " + path);
}

namespace {

// One table row, shared by the TSV and JSON readers: reconstruct the entry
// from the decimal value and check every serialized rendering against it.
ReciprocalEntry entry_from_fields(const std::string& family, int index,
                                  const std::string& value_sexagesimal,
                                  const std::string& value_decimal,
                                  const std::string& igi_sexagesimal) {
    if (index < 1) throw SyntaxError("bad table row: index " + std::to_string(index));
    Rational value = Rational::from_string(value_decimal);
    std::string floating =
        format_sexagesimal(from_rational(value).value, FormatStyle::Floating);
    if (floating != value_sexagesimal)
        throw SyntaxError("table row mismatch: " + value_decimal + " renders as " +
                          floating + ", row says " + value_sexagesimal);
    Sexagesimal g = igi(value);
    FormatStyle style = igi_sexagesimal.find(';') != std::string::npos
                            ? FormatStyle::Canonical
                            : FormatStyle::Floating;
    if (format_sexagesimal(g, style) != igi_sexagesimal)
        throw SyntaxError("table row mismatch: igi(" + value_decimal + ") renders as " +
                          format_sexagesimal(g, style) + ", row says " + igi_sexagesimal);
    return {value, g, family, index};
}

std::vector<ReciprocalFamily> families_from_entries(
    const std::vector<ReciprocalEntry>& entries) {
    std::vector<ReciprocalFamily> families;
    std::vector<std::string> seen;
    for (const auto& e : entries) {
        if (std::find(seen.begin(), seen.end(), e.family) == seen.end()) {
            seen.push_back(e.family);
            families.push_back(family_from_spec(e.family));
        }
    }
    return families;
}

int parse_index(const std::string& field) {
    try {
        size_t used = 0;
        int index = std::stoi(field, &used);
        if (used != field.size()) throw SyntaxError("bad table index \"" + field + "\"");
        return index;
    } catch (const std::logic_error&) {
        throw SyntaxError("bad table index \"" + field + "\"");
    }
}

ReciprocalTable import_table_tsv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) ||
        line != "family\tindex\tvalue_sexagesimal\tvalue_decimal\tigi_sexagesimal")
        throw SyntaxError("bad table header");

    ReciprocalTable table;
    while (std::getline(in, line)) {
        if (line.empty()) {
            if (in.peek() == std::char_traits<char>::eof()) break;
            throw SyntaxError("blank line inside table");
        }
        std::vector<std::string> fields;
        size_t start = 0;
        for (size_t tab = line.find('\t'); tab != std::string::npos;
             tab = line.find('\t', start)) {
            fields.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        fields.push_back(line.substr(start));
        if (fields.size() != 5)
            throw SyntaxError("bad table row (expected 5 columns): " + line);
        table.entries.push_back(entry_from_fields(fields[0], parse_index(fields[1]),
                                                  fields[2], fields[3], fields[4]));
    }
    table.families = families_from_entries(table.entries);
    for (const auto& e : table.entries) table.n_max = std::max(table.n_max, e.index);
    return table;
}

ReciprocalTable import_table_json(std::istream& in) {
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(std::string("bad table JSON: ") + e.what());
    }
    ReciprocalTable table;
    try {
        for (const auto& label : j.at("families")) {
            ReciprocalFamily f = family_from_spec(label.get<std::string>());
            if (f.label() != label.get<std::string>())
                throw SyntaxError("non-canonical family label " + label.get<std::string>());
            table.families.push_back(f);
        }
        table.n_max = j.at("n_max").get<int>();
        for (const auto& row : j.at("entries")) {
            table.entries.push_back(entry_from_fields(
                row.at("family").get<std::string>(), row.at("index").get<int>(),
                row.at("value_sexagesimal").get<std::string>(),
                row.at("value_decimal").get<std::string>(),
                row.at("igi_sexagesimal").get<std::string>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw SyntaxError(std::string("bad table JSON: ") + e.what());
    }
    return table;
}

}  // namespace

ReciprocalTable import_table(std::istream& in, OutputFormat format) {
    return format == OutputFormat::Json ? import_table_json(in) : import_table_tsv(in);
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact sexagesimal arithmetic, reciprocal tables and circle geometry"};
    app.name("gesh");
    app.require_subcommand(1);

    Options o;
    app.add_option("--output", o.output_name, "output format: text, json or tsv")
        ->check(CLI::IsMember({"text", "json", "tsv"}));

    auto style_check = CLI::IsMember({"canonical", "floating"});

    CLI::App* parse = app.add_subcommand("parse", "parse a sexagesimal numeral");
    parse->add_option("text", o.text, "numeral, e.g. \"1,29;31,32,45,6,15\"")->required();
    auto* parse_assume =
        parse->add_option("--assume-point", o.assume_point,
                          "read point-free input with its first digit at place K");
    parse->add_flag("--floating", o.floating,
                    "declare the input point-free (rejects numerals containing ';')")
        ->excludes(parse_assume);
    parse->add_option("--format", o.format_name, "rendering: canonical or floating")
        ->check(style_check);

    CLI::App* eval = app.add_subcommand("eval", "evaluate an arithmetic expression");
    eval->add_option("expr", o.text,
                     "expression over sexagesimal literals with + - * / ^ ( ) and igi(x)")
        ->required();
    eval->add_option("--max-digits", o.max_digits,
                     "truncate non-terminating expansions after N fractional digits")
        ->check(CLI::PositiveNumber);
    eval->add_option("--format", o.format_name, "rendering: canonical or floating")
        ->check(style_check);

    CLI::App* recip = app.add_subcommand("recip", "reciprocal (igi) of a regular number");
    recip->add_option("number", o.text, "regular number, e.g. 19,12 or 25/8")->required();
    recip->add_flag("--floating", o.floating,
                    "declare the input point-free (rejects numerals containing ';')");
    recip->add_option("--format", o.format_name, "rendering: canonical or floating")
        ->check(style_check);

    CLI::App* regular = app.add_subcommand("regular", "regularity of a rational");
    regular->add_option("number", o.text, "value to test, e.g. 3;9 or 63/20")->required();
    regular->add_flag("--require-regular", o.require_regular,
                      "exit 1 when the value is not regular");

    CLI::App* table = app.add_subcommand("table", "generate a reciprocal table");
    table->add_option("--family", o.families,
                      "family spec like 2^n or 2^n*3^2 (repeatable; default: the six "
                      "classic families)");
    table->add_option("--n-max", o.n_max, "highest generator exponent")
        ->check(CLI::PositiveNumber);
    table->add_option("--igi-style", o.igi_style_name,
                      "reciprocal column rendering: canonical or floating")
        ->check(style_check);
    table->add_option("--out", o.out_path, "write to a file instead of standard output");

    CLI::App* pi_search = app.add_subcommand("pi-search", "regular approximations of pi");
    pi_search->add_option("--lo", o.lo, "lower bound (default 3)");
    pi_search->add_option("--hi", o.hi, "upper bound (default 16/5)");
    pi_search->add_option("--max-exponent", o.max_exponent,
                          "bound on |a|,|b|,|c| in 2^a 3^b 5^c (default 13)")
        ->check(CLI::PositiveNumber);
    pi_search->add_option("--pi-ref", o.pi_ref, "reference value of pi");
    pi_search->add_option("--top", o.top, "print only the N best candidates")
        ->check(CLI::PositiveNumber);

    CLI::App* circle = app.add_subcommand("circle", "circumference and area of a circle");
    auto* circle_d = circle->add_option("--diameter", o.diameter, "diameter in nindan");
    auto* circle_c =
        circle->add_option("--circumference", o.circumference, "circumference in nindan");
    circle_d->excludes(circle_c);
    circle->add_option("--pi", o.pi,
                       "pi as a numeral, fraction, or preset babylonian3 / babylonian25_8")
        ->required();
    circle->add_option("--height", o.height, "also report the cylinder volume for this height");

    CLI::App* plot = app.add_subcommand("plot", "circular plot with a surrounding wall");
    plot->add_option("--inner", o.inner, "inner diameter, e.g. \"3 nindan\"")->required();
    plot->add_option("--wall", o.wall, "wall width, e.g. \"0.5 shudua\" (default none)");
    plot->add_option("--pi", o.pi,
                     "pi as a numeral, fraction, or preset babylonian3 / babylonian25_8")
        ->required();
    plot->add_option("--places", o.places,
                     "sexagesimal fractional places to round the area to (default 1)")
        ->check(CLI::NonNegativeNumber);
    plot->add_option("--mode", o.mode_name, "rounding mode")
        ->check(CLI::IsMember({"half-up", "half-even", "floor", "ceiling", "truncate"}));

    CLI::App* units = app.add_subcommand("units", "convert and display unit quantities");
    units->add_option("quantity", o.text, "quantity, e.g. \"3 nindan\" or \"43/6 sar\"")
        ->required();
    units->add_option("--to", o.to_unit, "convert to this unit of the same dimension");
    units->add_flag("--mixed", o.mixed, "show the mixed form, e.g. \"7 sar 10 gín\"");
    units->add_flag("--metric", o.metric, "show the approximate metric size");
    units->add_option("--decimals", o.decimals, "decimal places for --metric (default 1)")
        ->check(CLI::NonNegativeNumber);

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    o.output = o.output_name == "json"  ? OutputFormat::Json
               : o.output_name == "tsv" ? OutputFormat::Tsv
                                        : OutputFormat::Text;
    try {
        if (o.output == OutputFormat::Tsv && !table->parsed()) {
            err << "error: tsv output is only available for the table subcommand\n";
            return 2;
        }
        if (circle->parsed() && !circle_d->count() && !circle_c->count()) {
            err << "error: give one of --diameter and --circumference\n";
            return 2;
        }
        std::ostringstream buffer;
        if (parse->parsed()) run_parse(o, buffer);
        else if (eval->parsed()) run_eval(o, buffer);
        else if (recip->parsed()) run_recip(o, buffer);
        else if (regular->parsed()) run_regular(o, buffer);
        else if (table->parsed()) run_table(o, buffer);
        else if (pi_search->parsed()) run_pi_search(o, buffer);
        else if (circle->parsed()) run_circle(o, buffer);
        else if (plot->parsed()) run_plot(o, buffer);
        else if (units->parsed()) run_units(o, buffer);
        out << buffer.str();
        return 0;
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gesh

#include "sgd/cli.hpp"

#include "sgd/groebner.hpp"
#include "sgd/orders.hpp"
#include "sgd/parser.hpp"
#include "sgd/sagbi.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace sgd {
namespace {

using Json = nlohmann::ordered_json;

struct Settings {
    std::string command;
    std::string input;
    std::string format = "text";
    std::string method = "subduction";
    long hilbert_bound = default_hilbert_cap;
    bool homogenize_t = false;
    std::string criterion = "nicer";
    unsigned jobs = 1;
};

class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw InputError("cannot open input file '" + path + "'");
    buf << file.rdbuf();
    return buf.str();
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    throw InputError("option '" + key + "' expects true or false, got '" + v + "'");
}

// File options fill in whatever was not given on the command line.
void apply_file_options(const std::map<std::string, std::string>& opts, Settings& s, const CLI::App& app) {
    for (const auto& [key, value] : opts) {
        if (key != "method" && key != "hilbert-bound" && key != "homogenize-t" && key != "criterion") {
            throw InputError("unknown option '" + key + "' in input file");
        }
        const bool from_cli = app.count("--" + key) > 0;
        if (key == "method") {
            if (!from_cli) s.method = value;
        } else if (key == "hilbert-bound") {
            if (!from_cli) {
                try {
                    s.hilbert_bound = std::stol(value);
                } catch (const std::exception&) {
                    throw InputError("option 'hilbert-bound' expects an integer, got '" + value + "'");
                }
            }
        } else if (key == "homogenize-t") {
            if (!from_cli) s.homogenize_t = parse_bool(key, value);
        } else if (!from_cli) { // criterion
            s.criterion = value;
        }
    }
    if (s.method != "subduction" && s.method != "hilbert") throw InputError("unknown method '" + s.method + "'");
    if (s.criterion != "nicer" && s.criterion != "preferable") {
        throw InputError("unknown criterion '" + s.criterion + "'");
    }
    if (s.hilbert_bound < 1) throw InputError("hilbert-bound must be positive");
}

std::vector<long> weight_list(const WeightVector& w) { return {w.entries().begin(), w.entries().end()}; }

std::vector<std::string> leading_list(const OrderClass& c, const VariableContext& vars) {
    std::vector<std::string> out;
    for (const auto& e : c.tuple) out.push_back(monomial_to_string(e, vars));
    return out;
}

Json class_json(const OrderClass& c, const VariableContext& vars, std::optional<bool> is_basis) {
    Json j;
    j["weight"] = weight_list(c.weight);
    j["leading_monomials"] = leading_list(c, vars);
    if (is_basis) j["is_basis"] = *is_basis;
    return j;
}

std::string join(const std::vector<std::string>& items) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
    return s;
}

std::string class_text(const OrderClass& c, const VariableContext& vars, std::optional<bool> is_basis) {
    std::vector<std::string> w;
    for (long v : c.weight.entries()) w.push_back(std::to_string(v));
    std::string line = "weight [" + join(w) + "]  leading [" + join(leading_list(c, vars)) + "]";
    if (is_basis) line += std::string("  basis ") + (*is_basis ? "true" : "false");
    return line;
}

struct Report {
    Json json;
    std::ostringstream text;
    int code = exit_ok;
};

void emit_classes(Report& r, const std::vector<OrderClass>& classes, const VariableContext& vars,
                  std::optional<bool> is_basis) {
    Json arr = Json::array();
    r.text << "classes: " << classes.size() << '\n';
    for (const auto& c : classes) {
        arr.push_back(class_json(c, vars, is_basis));
        r.text << class_text(c, vars, is_basis) << '\n';
    }
    r.json["classes"] = std::move(arr);
}

void emit_warning(Report& r, const std::optional<std::string>& warning) {
    if (!warning) return;
    r.json["bound_warning"] = *warning;
    r.text << "warning: " << *warning << '\n';
}

Report execute(const Settings& s, std::vector<Polynomial> polys) {
    if (s.homogenize_t) polys = homogenize_with_t(polys);
    const VariableContext& vars = *polys.front().ring();

    Report r;
    r.json["command"] = s.command;
    r.json["variables"] = vars.names();
    r.text << "command: " << s.command << '\n' << "variables: " << join(vars.names()) << '\n';

    SagbiOptions sopts;
    sopts.method = s.method == "hilbert" ? SagbiMethod::hilbert : SagbiMethod::subduction;
    sopts.hilbert_cap = s.hilbert_bound;
    sopts.jobs = s.jobs;
    DetectionOptions gopts{s.jobs};
    auto set_method = [&](const std::string& m) {
        r.json["method"] = m;
        r.text << "method: " << m << '\n';
    };
    std::optional<std::string> warning;
    if (sopts.method == SagbiMethod::hilbert &&
        (s.command == "detect-sagbi" || s.command == "universal-sagbi")) {
        warning = hilbert_bound_warning(polys, s.hilbert_bound);
    }

    if (s.command == "classes") {
        emit_classes(r, extract_weight_vectors(polys), vars, std::nullopt);
    } else if (s.command == "detect-gb") {
        set_method("buchberger");
        auto found = weight_vectors_realizing_gb(polys, gopts);
        emit_classes(r, found, vars, true);
        if (found.empty()) r.code = exit_no_classes;
    } else if (s.command == "detect-sagbi") {
        set_method(s.method);
        auto found = weight_vectors_realizing_sagbi(polys, sopts);
        emit_classes(r, found, vars, true);
        emit_warning(r, warning);
        if (found.empty()) r.code = exit_no_classes;
    } else if (s.command == "universal-gb" || s.command == "universal-sagbi") {
        const bool gb = s.command == "universal-gb";
        set_method(gb ? "buchberger" : s.method);
        auto counter = gb ? universal_gb_counterexample(polys, gopts) : universal_sagbi_counterexample(polys, sopts);
        r.json["universal"] = !counter.has_value();
        r.text << "universal: " << (counter ? "false" : "true") << '\n';
        if (counter) {
            r.json["counterexample"] = class_json(*counter, vars, false);
            r.text << "counterexample: " << class_text(*counter, vars, false) << '\n';
        } else {
            r.json["counterexample"] = nullptr;
        }
        emit_warning(r, warning);
    } else { // rank
        const bool nicer = s.criterion == "nicer";
        r.json["criterion"] = s.criterion;
        r.text << "criterion: " << s.criterion << '\n';
        if (!nicer) warning = hilbert_bound_warning(polys, s.hilbert_bound);
        auto groups = rank_orders(polys, nicer ? RankCriterion::nicer : RankCriterion::preferable, s.hilbert_bound);
        Json arr = Json::array();
        r.text << "groups: " << groups.size() << '\n';
        for (std::size_t g = 0; g < groups.size(); ++g) {
            Json jg;
            jg["rank"] = g + 1;
            r.text << "rank " << g + 1 << ": ";
            if (nicer) {
                jg["dimension"] = groups[g].dimension;
                jg["degree"] = groups[g].degree.get_si();
                r.text << "dimension " << groups[g].dimension << ", degree " << groups[g].degree.get_str();
            } else {
                jg["hilbert"] = groups[g].hilbert.values;
                std::vector<std::string> hv;
                for (long v : groups[g].hilbert.values) hv.push_back(std::to_string(v));
                r.text << "hilbert [" << join(hv) << "]";
            }
            r.text << ", classes " << groups[g].classes.size() << '\n';
            Json cls = Json::array();
            for (const auto& c : groups[g].classes) {
                cls.push_back(class_json(c, vars, std::nullopt));
                r.text << "  " << class_text(c, vars, std::nullopt) << '\n';
            }
            jg["classes"] = std::move(cls);
            arr.push_back(std::move(jg));
        }
        r.json["groups"] = std::move(arr);
        emit_warning(r, warning);
    }
    return r;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Groebner and SAGBI basis detection over term-order classes", "sgdetect"};
    Settings s;
    app.add_option("command", s.command, "detect-gb | detect-sagbi | classes | universal-gb | universal-sagbi | rank")
        ->required()
        ->check(CLI::IsMember({"detect-gb", "detect-sagbi", "classes", "universal-gb", "universal-sagbi", "rank"}));
    app.add_option("--input", s.input, "system file, or - for standard input")->required();
    app.add_option("--format", s.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--method", s.method, "SAGBI criterion: subduction or hilbert")
        ->check(CLI::IsMember({"subduction", "hilbert"}));
    app.add_option("--hilbert-bound", s.hilbert_bound, "highest degree compared by Hilbert functions")
        ->check(CLI::PositiveNumber);
    app.add_flag("--homogenize-t", s.homogenize_t, "replace every f by t*f in a ring with a new variable t");
    app.add_option("--criterion", s.criterion, "ranking: preferable or nicer")
        ->check(CLI::IsMember({"preferable", "nicer"}));
    app.add_option("--jobs", s.jobs, "worker threads for per-class checks")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }

    try {
        ParsedSystem sys = parse_system(read_input(s.input, in));
        apply_file_options(sys.file.options, s, app);
        Report r = execute(s, std::move(sys.polys));
        if (s.format == "json") {
            out << r.json.dump(2) << '\n';
        } else {
            out << r.text.str();
        }
        return r.code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_input_error;
}

} // namespace sgd

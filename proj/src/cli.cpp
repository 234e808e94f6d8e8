#include "bnmodes/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "bnmodes/deterministic.hpp"
#include "bnmodes/dynamics.hpp"
#include "bnmodes/error.hpp"
#include "bnmodes/export.hpp"
#include "bnmodes/properties.hpp"
#include "json.hpp"

namespace bnmodes::cli {

namespace {

BooleanNetwork load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read model file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return BooleanNetwork::parse(text.str());
}

const std::string& single_mode(const CommandRequest& r) {
    if (r.modes.size() != 1) throw InvalidArgument(r.subcommand + " needs exactly one --mode");
    return r.modes.front();
}

ModeSpec bound_mode(const std::string& text, unsigned n) {
    ModeSpec spec = parse_mode(text);
    spec.validate(n);
    return spec;
}

Configuration read_configuration(const std::string& text, unsigned n, const char* flag) {
    if (text.empty()) throw InvalidArgument(std::string("missing ") + flag);
    return Configuration::from_text(text, n);
}

void require_format(const CommandRequest& r, std::initializer_list<std::string_view> allowed) {
    if (std::find(allowed.begin(), allowed.end(), r.format) == allowed.end()) {
        throw InvalidArgument("format '" + r.format + "' is not available for " + r.subcommand);
    }
}

AutomatonSet parse_phi(const std::string& raw, unsigned n) {
    std::string text;
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    }
    if (text.size() >= 2 && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
    std::vector<unsigned> indices;
    std::stringstream parts(text);
    for (std::string item; std::getline(parts, item, ',');) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
            throw ParseError("phi: malformed automaton set '" + raw + "'", 0, 0);
        }
        const unsigned i = static_cast<unsigned>(std::stoul(item));
        if (i < 1 || i > n) throw DimensionError("phi: automaton " + item + " out of range");
        indices.push_back(i);
    }
    return AutomatonSet(n, indices);
}

std::string edge_text(std::pair<Code, Code> e, unsigned n) { return to_text(e.first, n) + "->" + to_text(e.second, n); }

int cmd_table(const CommandRequest& r, const BooleanNetwork& net, std::ostream& out) {
    require_format(r, {"text"});
    const unsigned n = net.dimension();
    if (n > Limits{}.whole_space) throw CapExceeded("table: dimension exceeds the whole-space cap");
    std::vector<AutomatonSet> columns;
    for (const std::string& p : r.phi) columns.push_back(parse_phi(p, n));

    std::vector<std::string> header{"x"};
    for (const std::string& name : net.names()) header.push_back("f_" + name);
    for (const AutomatonSet& w : columns) header.push_back("phi_" + w.to_text());

    std::vector<std::size_t> width;
    for (const std::string& h : header) width.push_back(std::max<std::size_t>(h.size(), n));
    auto row = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) out << "  ";
            if (c + 1 < cells.size()) {
                out << std::left << std::setw(static_cast<int>(width[c])) << cells[c];
            } else {
                out << cells[c];
            }
        }
        out << '\n';
    };
    row(header);
    for (Code x = 0; x < (Code{1} << n); ++x) {
        std::vector<std::string> cells{to_text(x, n)};
        for (unsigned i = 1; i <= n; ++i) cells.push_back(net.local_value(i, x) ? "1" : "0");
        for (const AutomatonSet& w : columns) cells.push_back(to_text(phi(net, w.mask(), x), n));
        row(cells);
    }
    return kOk;
}

int cmd_step(const CommandRequest& r, const BooleanNetwork& net, std::ostream& out) {
    require_format(r, {"text"});
    const unsigned n = net.dimension();
    const ModeSpec spec = bound_mode(single_mode(r), n);
    const Configuration x = read_configuration(r.from, n, "--from");
    const SetUpdate update = make_set_update(net, spec);
    out << update.on(x).to_text() << '\n';
    return kOk;
}

int cmd_graph(const CommandRequest& r, const BooleanNetwork& net, std::ostream& out) {
    require_format(r, {"text", "dot", "json"});
    const TransitionGraph g = build_graph(net, bound_mode(single_mode(r), net.dimension()));
    const ExportOptions options{r.no_loops};
    if (r.format == "dot") {
        out << export_dot(g, options);
    } else if (r.format == "json") {
        out << export_json(g, net.names(), options);
    } else {
        for (const auto& e : g.edges.edges()) {
            if (!(r.no_loops && e.first == e.second)) out << edge_text(e, g.dimension()) << '\n';
        }
    }
    return kOk;
}

int cmd_attractors(const CommandRequest& r, const BooleanNetwork& net, std::ostream& out) {
    require_format(r, {"text", "json"});
    const TransitionGraph g = build_graph(net, bound_mode(single_mode(r), net.dimension()));
    const LimitStructure limits = limit_sets(g);
    if (r.format == "json") {
        nlohmann::ordered_json doc;
        doc["mode"] = g.mode.to_string();
        doc["limit_sets"] = nlohmann::ordered_json::array();
        for (const LimitSet& s : limits.sets) {
            nlohmann::ordered_json item;
            item["members"] = nlohmann::ordered_json::array();
            s.members.for_each([&](Code c) { item["members"].push_back(to_text(c, g.dimension())); });
            item["kind"] = to_string(s.kind);
            item["attractor"] = s.attractor;
            if (s.basin) {
                item["basin"] = nlohmann::ordered_json::array();
                s.basin->for_each([&](Code c) { item["basin"].push_back(to_text(c, g.dimension())); });
            }
            doc["limit_sets"].push_back(std::move(item));
        }
        out << doc.dump(2) << '\n';
        return kOk;
    }
    for (const LimitSet& s : limits.sets) {
        out << to_string(s.kind) << " {" << s.members.to_text() << "}";
        if (s.attractor) {
            out << " attractor basin {" << s.basin->to_text() << "}";
        } else {
            out << " not an attractor";
        }
        out << '\n';
    }
    return kOk;
}

int cmd_reach(const CommandRequest& r, const BooleanNetwork& net, std::ostream& out) {
    require_format(r, {"text"});
    const unsigned n = net.dimension();
    const TransitionGraph g = build_graph(net, bound_mode(single_mode(r), n));
    const Reachability answer =
        reachable(g, read_configuration(r.from, n, "--from"), read_configuration(r.to, n, "--to"));
    if (!answer.reachable) {
        out << "no\n";
        return r.fail_on_no ? kNo : kOk;
    }
    out << "yes\n";
    for (std::size_t k = 0; k < answer.witness.size(); ++k) out << (k ? " " : "") << answer.witness[k].to_text();
    out << '\n';
    return kOk;
}

int cmd_compare(const CommandRequest& r, const BooleanNetwork& net, std::ostream& out) {
    require_format(r, {"text"});
    if (r.modes.size() != 2) throw InvalidArgument("compare needs exactly two modes");
    const unsigned n = net.dimension();
    const TransitionGraph a = build_graph(net, bound_mode(r.modes[0], n));
    const TransitionGraph b = build_graph(net, bound_mode(r.modes[1], n));
    const Comparison c = compare(a, b, r.no_loops);
    const std::string first = a.mode.to_string();
    const std::string second = b.mode.to_string();
    switch (c.relation) {
    case Comparison::Relation::Equal: out << first << " = " << second << '\n'; break;
    case Comparison::Relation::FirstSubset: out << first << " < " << second << '\n'; break;
    case Comparison::Relation::SecondSubset: out << second << " < " << first << '\n'; break;
    case Comparison::Relation::Incomparable: out << first << " incomparable with " << second << '\n'; break;
    }
    auto list = [&](const std::string& name, const std::vector<std::pair<Code, Code>>& edges) {
        out << "only in " << name << ":";
        for (const auto& e : edges) out << ' ' << edge_text(e, n);
        out << '\n';
    };
    list(first, c.only_first);
    list(second, c.only_second);
    return kOk;
}

int cmd_check(const CommandRequest& r, const BooleanNetwork& net, std::ostream& out) {
    require_format(r, {"text"});
    PropertyOptions options;
    options.seed = r.seed;
    const std::vector<PropertyResult> results = check_properties(net, options);
    for (const PropertyResult& p : results) out << to_string(p) << '\n';
    return !all_ok(results) && r.fail_on_no ? kNo : kOk;
}

} // namespace

std::vector<std::string> split_modes(const std::string& text) {
    std::vector<std::string> pieces;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '{') ++depth;
        if (c == '}') --depth;
        if (c == ',' && depth == 0) {
            pieces.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    pieces.push_back(current);

    std::vector<std::string> modes;
    for (std::string& p : pieces) {
        const bool numeric = !p.empty() && std::all_of(p.begin(), p.end(), [](unsigned char c) {
            return std::isdigit(c) || std::isspace(c);
        });
        if (numeric && !modes.empty()) {
            modes.back() += "," + p;
        } else {
            modes.push_back(std::move(p));
        }
    }
    return modes;
}

int execute(const CommandRequest& r, std::ostream& out, std::ostream&) {
    const BooleanNetwork net = load_model(r.model_path);
    if (r.subcommand == "table") return cmd_table(r, net, out);
    if (r.subcommand == "step") return cmd_step(r, net, out);
    if (r.subcommand == "graph") return cmd_graph(r, net, out);
    if (r.subcommand == "attractors") return cmd_attractors(r, net, out);
    if (r.subcommand == "reach") return cmd_reach(r, net, out);
    if (r.subcommand == "compare") return cmd_compare(r, net, out);
    if (r.subcommand == "check") return cmd_check(r, net, out);
    throw InvalidArgument("unknown subcommand '" + r.subcommand + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boolean network updating modes"};
    app.name("bnmodes");
    app.require_subcommand(1);

    CommandRequest request;
    std::vector<std::string> mode_values;

    auto add_model = [&](CLI::App* sub) { sub->add_option("model", request.model_path, "model file")->required(); };
    auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--mode,--modes", mode_values, "updating mode")->take_all();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", request.format, "text, dot or json")->check(CLI::IsMember({"text", "dot", "json"}));
    };

    CLI::App* table = app.add_subcommand("table", "truth table with optional phi_W columns");
    add_model(table);
    table->add_option("--phi", request.phi, "automaton set W such as {2,3}")->take_all();

    CLI::App* step = app.add_subcommand("step", "successors of one configuration");
    add_model(step);
    add_mode(step);
    step->add_option("--from", request.from, "configuration")->required();

    CLI::App* graph = app.add_subcommand("graph", "whole-space transition graph");
    add_model(graph);
    add_mode(graph);
    add_format(graph);
    graph->add_flag("--no-loops", request.no_loops, "drop self-loops");

    CLI::App* attr = app.add_subcommand("attractors", "limit sets, attractors and basins");
    add_model(attr);
    add_mode(attr);
    add_format(attr);

    CLI::App* reach = app.add_subcommand("reach", "reachability with a shortest witness");
    add_model(reach);
    add_mode(reach);
    reach->add_option("--from", request.from, "source configuration")->required();
    reach->add_option("--to", request.to, "target configuration")->required();
    reach->add_flag("--fail-on-no", request.fail_on_no, "exit 1 when unreachable");

    CLI::App* cmp = app.add_subcommand("compare", "compare the graphs of two modes");
    add_model(cmp);
    add_mode(cmp);
    cmp->add_flag("--no-loops", request.no_loops, "ignore self-loops");

    CLI::App* check = app.add_subcommand("check", "run the property suite on a model");
    add_model(check);
    check->add_option("--seed", request.seed, "seed for sampled checks");
    check->add_flag("--fail-on-no", request.fail_on_no, "exit 1 when a property fails");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    request.subcommand = app.get_subcommands().front()->get_name();
    for (const std::string& v : mode_values) {
        for (std::string& m : split_modes(v)) request.modes.push_back(std::move(m));
    }
    try {
        return execute(request, out, err);
    } catch (const Error& e) {
        err << "bnmodes: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace bnmodes::cli

#include "assoc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "assoc/algebra.hpp"
#include "assoc/analysis.hpp"
#include "assoc/error.hpp"
#include "assoc/graph.hpp"
#include "assoc/io.hpp"
#include "assoc/patterns.hpp"
#include "assoc/store.hpp"

namespace assoc::cli {

namespace {

// Key selection flags for one axis: --row K (repeatable), --row-prefix P,
// --row-range LO HI; likewise for --col.
struct SpecFlags {
    std::vector<std::string> keys;
    std::string prefix;
    std::vector<std::string> range;
    CLI::Option* keys_opt = nullptr;
    CLI::Option* prefix_opt = nullptr;
    CLI::Option* range_opt = nullptr;

    void attach(CLI::App* cmd, const std::string& axis) {
        keys_opt = cmd->add_option("--" + axis, keys, "Select this " + axis + " key (repeatable)");
        prefix_opt = cmd->add_option("--" + axis + "-prefix", prefix, "Select " + axis + " keys with this prefix");
        range_opt = cmd->add_option("--" + axis + "-range", range, "Select " + axis + " keys in [LO, HI]")
                        ->expected(2)
                        ->allow_extra_args(false);
        keys_opt->excludes(prefix_opt)->excludes(range_opt);
        prefix_opt->excludes(range_opt);
    }

    KeySpec spec() const {
        if (keys_opt->count() > 0) return KeySpec::set(std::vector<Key>(keys.begin(), keys.end()));
        if (prefix_opt->count() > 0) return KeySpec::prefix(Key(prefix));
        if (range_opt->count() > 0) return KeySpec::range(Key(range.at(0)), Key(range.at(1)));
        return KeySpec::all();
    }
};

AssocArray load(const std::string& path) {
    if (path == "-") return read_triples(std::cin);
    return read_triples_file(path);
}

void emit(const AssocArray& a, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        write_triples(a, out);
    } else {
        write_triples_file(a, path);
    }
}

std::vector<Key> to_keys(const std::vector<std::string>& texts) { return {texts.begin(), texts.end()}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Associative array algebra over triple files", "assoc"};
    app.require_subcommand(1);

    std::string input, input_b, output, format = "table", semiring = "arith", verb, axis = "row";
    double tol = kDefaultPivotTol;
    std::size_t maxiter = 1000;
    std::size_t steps = 1;
    std::vector<std::string> sources;

    auto add_output = [&](CLI::App* cmd) { cmd->add_option("-o,--output", output, "Output file (default stdout)"); };

    auto* ingest = app.add_subcommand("ingest", "Read a CSV table or triple file into triples");
    ingest->add_option("--format", format, "Input format")->check(CLI::IsMember({"table", "triples"}));
    ingest->add_option("input", input, "Input file")->required();
    add_output(ingest);

    auto* op = app.add_subcommand("op", "Binary array operation");
    op->add_option("verb", verb, "add | mult | prod | mask | delete")
        ->required()
        ->check(CLI::IsMember({"add", "mult", "prod", "mask", "delete"}));
    op->add_option("a", input, "Left operand")->required();
    op->add_option("b", input_b, "Right operand")->required();
    op->add_option("--semiring", semiring, "arith | maxplus | minplus | maxmin | lattice")
        ->check(CLI::IsMember({"arith", "maxplus", "minplus", "maxmin", "lattice"}));
    add_output(op);

    SpecFlags rows, cols;
    auto* select = app.add_subcommand("select", "Sub-array by row and column key specs");
    select->add_option("input", input)->required();
    rows.attach(select, "row");
    cols.attach(select, "col");
    add_output(select);

    auto* pattern = app.add_subcommand("pattern", "Test for a permutation or clique pattern");
    pattern->add_option("kind", verb, "perm | clique")->required()->check(CLI::IsMember({"perm", "clique"}));
    pattern->add_option("input", input)->required();

    auto* degree_cmd = app.add_subcommand("degree", "Entry count per key");
    degree_cmd->add_option("input", input)->required();
    degree_cmd->add_option("--axis", axis, "row | col")->check(CLI::IsMember({"row", "col"}));
    add_output(degree_cmd);

    auto* correlate_cmd = app.add_subcommand("correlate", "A times its transpose under arith");
    correlate_cmd->add_option("input", input)->required();
    add_output(correlate_cmd);

    auto* bfs_cmd = app.add_subcommand("bfs", "Frontier exactly N hops from the sources");
    bfs_cmd->add_option("input", input)->required();
    bfs_cmd->add_option("--source", sources, "Source key (repeatable)")->required();
    bfs_cmd->add_option("--steps", steps, "Hop count");
    add_output(bfs_cmd);

    auto* nullspace_cmd = app.add_subcommand("nullspace", "Null space basis");
    nullspace_cmd->add_option("input", input)->required();
    nullspace_cmd->add_option("--tol", tol, "Relative pivot tolerance");
    add_output(nullspace_cmd);

    auto* rank_cmd = app.add_subcommand("rank", "Numerical rank");
    rank_cmd->add_option("input", input)->required();
    rank_cmd->add_option("--tol", tol, "Relative pivot tolerance");

    auto* eigen_cmd = app.add_subcommand("eigen", "Dominant eigenpair by power iteration");
    eigen_cmd->add_option("input", input)->required();
    eigen_cmd->add_option("--tol", tol, "Convergence tolerance");
    eigen_cmd->add_option("--maxiter", maxiter, "Iteration limit");
    eigen_cmd->add_option("-o,--output", output, "Write the eigenvector triples here");

    auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering of the support");
    dot_cmd->add_option("input", input)->required();
    add_output(dot_cmd);

    auto* transpose_cmd = app.add_subcommand("transpose", "Swap rows and columns");
    transpose_cmd->add_option("input", input)->required();
    add_output(transpose_cmd);

    auto* logical_cmd = app.add_subcommand("logical", "Replace every value by 1");
    logical_cmd->add_option("input", input)->required();
    add_output(logical_cmd);

    auto* incidence_cmd = app.add_subcommand("incidence", "Turn values into column keys");
    incidence_cmd->add_option("input", input)->required();
    add_output(incidence_cmd);

    auto* store = app.add_subcommand("store", "Persistent table operations");
    store->require_subcommand(1);
    std::string dir;
    auto* store_init = store->add_subcommand("init", "Create an empty table");
    store_init->add_option("dir", dir)->required();
    auto* store_insert = store->add_subcommand("insert", "Insert an array (last write wins)");
    store_insert->add_option("dir", dir)->required();
    store_insert->add_option("input", input)->required();
    SpecFlags store_rows, store_cols;
    auto* store_select = store->add_subcommand("select", "Read a sub-array");
    store_select->add_option("dir", dir)->required();
    store_rows.attach(store_select, "row");
    store_cols.attach(store_select, "col");
    add_output(store_select);
    auto* store_delete = store->add_subcommand("delete", "Delete the cells in a mask's support");
    store_delete->add_option("dir", dir)->required();
    store_delete->add_option("mask", input)->required();
    auto* store_compact = store->add_subcommand("compact", "Merge segments");
    store_compact->add_option("dir", dir)->required();

    std::vector<std::string> argv_store{"assoc"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (ingest->parsed()) {
            AssocArray a;
            if (input == "-") a = format == "table" ? read_table(std::cin) : read_triples(std::cin);
            else a = format == "table" ? read_table_file(input) : read_triples_file(input);
            emit(a, output, out);
        } else if (op->parsed()) {
            const AssocArray a = load(input);
            const AssocArray b = load(input_b);
            const Semiring sr = Semiring::by_name(semiring);
            AssocArray c;
            if (verb == "add") c = eladd(a, b, sr);
            else if (verb == "mult") c = elmult(a, b, sr);
            else if (verb == "prod") c = arrayprod(a, b, sr);
            else if (verb == "mask") c = mask_select(a, b);
            else c = delete_entries(a, b);
            emit(c, output, out);
        } else if (select->parsed()) {
            emit(subarray(load(input), rows.spec(), cols.spec()), output, out);
        } else if (pattern->parsed()) {
            const AssocArray a = load(input);
            const bool hit = verb == "perm" ? is_permutation(a) : is_clique(a);
            out << (hit ? "true" : "false") << '\n';
        } else if (degree_cmd->parsed()) {
            emit(degree(load(input), axis == "row" ? Axis::Row : Axis::Column), output, out);
        } else if (correlate_cmd->parsed()) {
            emit(correlate(load(input)), output, out);
        } else if (bfs_cmd->parsed()) {
            const std::vector<Key> keys = to_keys(sources);
            emit(bfs(load(input), keys, steps), output, out);
        } else if (nullspace_cmd->parsed()) {
            emit(null_space(load(input), tol), output, out);
        } else if (rank_cmd->parsed()) {
            out << "rank " << rank(load(input), tol) << '\n';
        } else if (eigen_cmd->parsed()) {
            const EigenResult r = dominant_eigenpair(load(input), tol, maxiter);
            out << "lambda " << format_number(r.eigenvalue) << '\n'
                << "iterations " << r.iterations << '\n'
                << "residual " << format_number(r.residual) << '\n';
            if (!output.empty()) write_triples_file(r.eigenvector, output);
        } else if (dot_cmd->parsed()) {
            const AssocArray a = load(input);
            if (output.empty() || output == "-") {
                export_dot(a, out);
            } else {
                std::ofstream f(output, std::ios::binary | std::ios::trunc);
                if (!f) throw IoError("cannot create " + output);
                export_dot(a, f);
            }
        } else if (transpose_cmd->parsed()) {
            emit(transpose(load(input)), output, out);
        } else if (logical_cmd->parsed()) {
            emit(logical(load(input)), output, out);
        } else if (incidence_cmd->parsed()) {
            emit(incidence(load(input)), output, out);
        } else if (store->parsed()) {
            Table t = store_select->parsed() ? Table::open_read_only(dir) : Table::open(dir);
            t.on_warning([&err](const std::string& msg) { err << "warning: " << msg << '\n'; });
            if (store_init->parsed()) {
                out << "initialized " << dir << '\n';
            } else if (store_insert->parsed()) {
                out << "inserted " << t.insert(load(input)) << '\n';
            } else if (store_select->parsed()) {
                emit(t.select(store_rows.spec(), store_cols.spec()), output, out);
            } else if (store_delete->parsed()) {
                out << "deleted " << t.erase(load(input)) << '\n';
            } else if (store_compact->parsed()) {
                auto [before, after] = t.compact();
                out << "segments " << before << " -> " << after << '\n';
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace assoc::cli

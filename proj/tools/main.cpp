#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "bps/checks.hpp"
#include "bps/correspondence.hpp"
#include "bps/io.hpp"
#include "bps/numtheory.hpp"
#include "bps/transforms.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

void emit(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

// --in accepts either a sequence JSON document or a CSV table; CSV carries no
// kind/w metadata, so those arrive as flags.
bps::SequenceFile load_sequence(const std::string& path, const std::optional<std::string>& kind,
                                const std::optional<long long>& w) {
    if (std::filesystem::path(path).extension() == ".csv") {
        if (!kind) {
            throw std::invalid_argument(path + ": CSV input requires --kind");
        }
        return bps::ingest_csv(path, bps::kind_from_name(*kind), w.value_or(1));
    }
    if (kind || w) {
        throw std::invalid_argument("--kind/--w are only meaningful for CSV input");
    }
    return bps::read_sequence_file(path);
}

struct SequenceInputFlags {
    std::string path;
    std::optional<std::string> kind;
    std::optional<long long> w;

    void attach(CLI::App* cmd) {
        cmd->add_option("--in", path, "input sequence file (.json or .csv)")->required();
        cmd->add_option("--kind", kind, "sequence kind of a CSV input");
        cmd->add_option("--w", w, "tangency w of a CSV input (default 1)");
    }

    bps::SequenceFile load() const { return load_sequence(path, kind, w); }
};

void add_nt_commands(CLI::App& app) {
    CLI::App* nt = app.add_subcommand("nt", "number-theoretic primitives");
    nt->require_subcommand(1);
    auto add = [&](const char* name, const char* help, auto action) {
        auto n = std::make_shared<long long>(0);
        CLI::App* cmd = nt->add_subcommand(name, help);
        cmd->add_option("n", *n, "positive integer")->required();
        cmd->callback([n, action, name] {
            nlohmann::json doc;
            doc["op"] = name;
            doc["n"] = *n;
            action(doc, *n);
            emit(doc);
        });
    };
    add("omega", "number of distinct prime factors",
        [](nlohmann::json& doc, long long n) { doc["value"] = bps::omega(n); });
    add("mobius", "Moebius function",
        [](nlohmann::json& doc, long long n) { doc["value"] = bps::mobius(n); });
    add("divisors", "all divisors in increasing order",
        [](nlohmann::json& doc, long long n) { doc["values"] = bps::divisors(n); });
    add("iset", "divisors k of n with n/k square-free",
        [](nlohmann::json& doc, long long n) { doc["values"] = bps::iset(n); });
}

void add_transform_commands(CLI::App& app) {
    CLI::App* transform = app.add_subcommand("transform", "GW <-> BPS sequence transforms");
    transform->require_subcommand(1);

    struct Direction {
        const char* name;
        const char* help;
        bps::InvariantSequence (*apply)(const bps::InvariantSequence&, const bps::TangencyContext&);
    };
    // Subcommand names the *output* kind; the input kind is implied.
    static const Direction directions[] = {
        {"local-gw", "local BPS -> local GW", bps::local_gw_from_bps},
        {"local-bps", "local GW -> local BPS", bps::local_bps_from_gw},
        {"relative-gw", "relative BPS -> relative GW", bps::relative_gw_from_bps},
        {"relative-bps", "relative GW -> relative BPS", bps::relative_bps_from_gw},
    };
    for (const Direction& dir : directions) {
        CLI::App* cmd = transform->add_subcommand(dir.name, dir.help);
        auto flags = std::make_shared<SequenceInputFlags>();
        flags->attach(cmd);
        cmd->callback([flags, &dir] {
            const bps::SequenceFile in = flags->load();
            bps::SequenceFile out{in.context, dir.apply(in.sequence, in.context), std::nullopt};
            emit(bps::sequence_to_json(out));
        });
    }
}

void add_cmatrix_commands(CLI::App& app, int& exit_code) {
    CLI::App* cmatrix = app.add_subcommand("cmatrix", "correspondence matrix");
    cmatrix->require_subcommand(1);

    auto add = [&](const char* name, const char* help) {
        CLI::App* cmd = cmatrix->add_subcommand(name, help);
        auto w = std::make_shared<long long>(0);
        auto n = std::make_shared<long long>(0);
        cmd->add_option("--w", *w, "tangency w")->required();
        cmd->add_option("--n", *n, "truncation order N")->required();
        return std::pair{cmd, [w, n] { return bps::TangencyContext(*w, *n); }};
    };

    {
        auto [cmd, ctx] = add("build", "build the N x N matrix from its closed formula");
        cmd->callback([ctx] { emit(bps::matrix_to_json(bps::build_c_matrix(ctx()))); });
    }
    {
        auto [cmd, ctx] = add("invert", "exact integer inverse of the matrix");
        cmd->callback(
            [ctx] { emit(bps::matrix_to_json(bps::invert_c_matrix(bps::build_c_matrix(ctx())))); });
    }
    {
        auto [cmd, ctx] = add("verify-oracle",
                              "compare the closed formula against the composed-kernel reconstruction");
        cmd->callback([ctx, &exit_code] {
            const bps::TangencyContext context = ctx();
            const bps::CorrespondenceMatrix built = bps::build_c_matrix(context);
            const bps::RatMat oracle = bps::composed_oracle_matrix(context);
            // One verdict per row; a failing row reports its first mismatch.
            std::vector<bps::Verdict> verdicts;
            for (long long s = 1; s <= context.n; ++s) {
                bps::Verdict v{s, bps::Rational(1), bps::Rational(1), true};
                for (long long t = 1; t <= s; ++t) {
                    const bps::Rational actual(built.entry(s, t));
                    const bps::Rational& expected = oracle(s - 1, t - 1);
                    if (actual != expected) {
                        v = {s, expected, actual, false};
                        break;
                    }
                }
                verdicts.push_back(std::move(v));
            }
            bps::CheckReport report = bps::CheckReport::make("cmatrix-oracle", std::move(verdicts));
            report.w = context.w;
            emit(bps::report_to_json(report));
            if (!report.overall) exit_code = kExitCheckFailed;
        });
    }
}

void add_check_commands(CLI::App& app, int& exit_code) {
    CLI::App* check = app.add_subcommand("check", "integrality and conjecture checks");
    check->require_subcommand(1);

    auto finish = [&exit_code](bps::CheckReport report, long long w) {
        report.w = w;
        emit(bps::report_to_json(report));
        if (!report.overall) exit_code = kExitCheckFailed;
    };

    {
        CLI::App* cmd = check->add_subcommand("local-integrality", "n(d) integral for all d");
        auto flags = std::make_shared<SequenceInputFlags>();
        flags->attach(cmd);
        cmd->callback([flags, finish] {
            const bps::SequenceFile in = flags->load();
            finish(bps::check_local_integrality(in.sequence), in.context.w);
        });
    }
    {
        CLI::App* cmd = check->add_subcommand("relative-integrality", "n[dw] integral for all d");
        auto flags = std::make_shared<SequenceInputFlags>();
        flags->attach(cmd);
        cmd->callback([flags, finish] {
            const bps::SequenceFile in = flags->load();
            finish(bps::check_relative_integrality(in.sequence), in.context.w);
        });
    }
    {
        CLI::App* cmd = check->add_subcommand(
            "takahashi", "3d m(d) = (-1)^{d+1} n(d) against supplied curve counts");
        auto flags = std::make_shared<SequenceInputFlags>();
        flags->attach(cmd);
        auto counts = std::make_shared<SequenceInputFlags>();
        cmd->add_option("--counts", counts->path, "curve-count sequence file (.json or .csv)")
            ->required();
        cmd->add_option("--counts-w", counts->w, "tangency w of a CSV counts file (default 1)");
        cmd->callback([flags, counts, finish] {
            const bps::SequenceFile n_loc = flags->load();
            if (n_loc.sequence.kind() != bps::SequenceKind::local_bps) {
                throw std::invalid_argument("check takahashi: --in must be a local-BPS sequence");
            }
            counts->kind = std::string(bps::kind_name(bps::SequenceKind::curve_counts));
            bps::SequenceFile m = std::filesystem::path(counts->path).extension() == ".csv"
                                      ? counts->load()
                                      : bps::read_sequence_file(counts->path);
            if (m.sequence.kind() != bps::SequenceKind::curve_counts) {
                throw std::invalid_argument("check takahashi: --counts must be a curve-counts sequence");
            }
            finish(bps::check_takahashi(m.sequence, n_loc.sequence), n_loc.context.w);
        });
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local/relative BPS state-count toolkit"};
    app.require_subcommand(1);

    int exit_code = kExitOk;
    add_nt_commands(app);
    add_transform_commands(app);
    add_cmatrix_commands(app, exit_code);
    add_check_commands(app, exit_code);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return exit_code;
}

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include <reeskit/reeskit.hpp>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"reeskit - defining equations of Rees algebras and friends"};
    app.require_subcommand(1);

    std::string file;
    bool json = false;
    reeskit::RunFlags flags;
    int64_t field_override = 0;

    const std::vector<std::string> commands = {
        "gb", "member", "elim", "rees", "reltype", "fresh", "rednum", "chain",
        "tn", "vv", "keralpha", "kerbeta", "fiber", "graded", "obstructions",
        "thmA", "thmB", "detclosure", "quotient"};

    std::map<std::string, CLI::App*> subs;
    for (const auto& c : commands) {
        CLI::App* s = app.add_subcommand(c);
        s->add_option("-f,--file", file, "session file (.rk)")->required();
        s->add_flag("--json", json, "emit the JSON report");
        s->add_option("--field", field_override, "override the coefficient prime");
        s->add_option("--cap", flags.cap, "degree cap (default 8)");
        s->add_option("--max", flags.cap, "alias for --cap");
        s->add_option("--rounds", flags.rounds, "round cap for detclosure (default 10)");
        s->add_option("--y-index", flags.y_index, "1-based index of the generator playing y");
        s->add_option("--ideal", flags.ideal, "ideal name");
        s->add_option("--J", flags.J, "reduction ideal name");
        s->add_option("--I", flags.I, "ideal name");
        s->add_option("--sub", flags.sub, "subideal name (vv)");
        s->add_option("--poly", flags.poly, "polynomial literal");
        s->add_option("--by", flags.by, "element to quotient by");
        s->add_option("--drop", flags.drop, "comma-separated variables to eliminate");
        s->add_option("--order", flags.order, "monomial order for gb (lex|degrevlex)");
        s->add_option("--n", flags.n, "single degree n");
        s->add_option("--p", flags.p_deg, "degree p (thmB, obstructions)");
        subs[c] = s;
    }

    // suite mode: run every '#@ check' annotation in the given files
    CLI::App* suite = app.add_subcommand("suite", "run annotated expectation checks");
    std::vector<std::string> suite_files;
    int jobs = 1;
    suite->add_option("files", suite_files, "session files")->required();
    suite->add_option("--jobs", jobs, "worker threads");
    suite->add_flag("--json", json, "emit a JSON summary");

    CLI11_PARSE(app, argc, argv);

    try {
        if (suite->parsed()) {
            std::vector<reeskit::SuiteResult> results(suite_files.size());
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (;;) {
                    std::size_t k = next.fetch_add(1);
                    if (k >= suite_files.size()) return;
                    results[k] = reeskit::run_suite_file(read_file(suite_files[k]),
                                                         suite_files[k]);
                }
            };
            int nthreads = std::max(1, std::min<int>(jobs, static_cast<int>(suite_files.size())));
            std::vector<std::thread> pool;
            for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
            int checks = 0, failures = 0;
            for (const auto& r : results) {
                for (const auto& l : r.lines) std::cout << l << "\n";
                checks += r.checks;
                failures += r.failures;
            }
            if (json) {
                reeskit::Json j;
                j["checks"] = checks;
                j["failures"] = failures;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << checks << " checks, " << failures << " failures\n";
            }
            return failures == 0 ? 0 : 2;
        }

        for (const auto& [name, s] : subs) {
            if (!s->parsed()) continue;
            std::string text = read_file(file);
            reeskit::SessionFile sf = reeskit::parse_session(text);
            flags.field = field_override;
            reeskit::Report rep = reeskit::run_command(name, sf, flags, text);
            if (json)
                std::cout << rep.to_json().dump(2) << "\n";
            else
                std::cout << rep.to_text();
            return rep.exit_code;
        }
    } catch (const reeskit::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const reeskit::TnFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const reeskit::NotAReductionWithinCap& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const reeskit::HypothesisFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qakh/analysis.hpp"
#include "qakh/fixtures.hpp"
#include "qakh/khovanov.hpp"
#include "qakh/obstruction.hpp"
#include "qakh/skein.hpp"

using namespace qakh;

namespace {

LinkDiagram load_pd(const std::string& arg) {
    if (arg.empty()) throw std::invalid_argument("empty PD input");
    std::string text = arg;
    if (arg.find('(') == std::string::npos || std::ifstream(arg).good()) {
        std::ifstream in(arg);
        if (in.good()) {
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
    }
    return LinkDiagram::parse(text);
}

std::string grid(const BigradedDims& h) {
    if (h.empty()) return "(empty)\n";
    std::ostringstream out;
    out << "  j\\i ";
    for (int i = h.i_min(); i <= h.i_max(); i++) out << " " << i << "\t";
    out << "\n";
    for (int j = h.j_max(); j >= h.j_min(); j -= 2) {
        out << " " << j << " |";
        for (int i = h.i_min(); i <= h.i_max(); i++) {
            long v = h.at(i, j);
            out << " " << (v ? std::to_string(v) : ".") << "\t";
        }
        out << "\n";
    }
    return out.str();
}

int cmd_compute(const std::string& pd, const std::string& invariant, bool json) {
    auto d = load_pd(pd);
    nlohmann::json j;
    bool want_bracket = invariant == "bracket" || invariant == "all";
    bool want_jones = invariant == "jones" || invariant == "all";
    bool want_kh = invariant == "khovanov" || invariant == "all";
    if (want_bracket) {
        auto b = bracket(d);
        if (json)
            j["bracket"] = b.to_json();
        else
            std::cout << "bracket: " << b.str("A") << "\n";
    }
    if (want_jones) {
        auto v = jones(d);
        if (json)
            j["jones"] = v.to_json();
        else
            std::cout << (invariant == "jones" ? "" : "jones: ") << v.str("t") << "\n";
    }
    if (want_kh) {
        auto h = khovanov(d);
        if (json)
            j["khovanov"] = h.to_json();
        else
            std::cout << "khovanov: " << kh_polynomial(h) << "\n" << grid(h);
    }
    if (json) std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_analyze(const std::string& pd, bool json) {
    auto d = load_pd(pd);
    auto h = khovanov(d);
    int sigma = signature(d);
    auto lee = lee_dims(d.component_count(), d.linking_matrix());
    auto thin = thinness(h, sigma);
    auto dg = differential_gaps(h);
    auto qg = quantum_gaps(h);
    auto br = breadths(h);
    auto km = knight_move_decompose(h, lee, sigma);

    nlohmann::json j;
    j["signature"] = sigma;
    j["thin"] = thin.thin;
    j["lee"] = lee.to_json();
    auto gaps_json = [](const std::vector<GapRecord>& gs) {
        nlohmann::json a = nlohmann::json::array();
        for (auto& g : gs) a.push_back({{"start", g.start_key}, {"length", g.length}});
        return a;
    };
    j["differential_gaps"] = gaps_json(dg);
    j["quantum_gaps"] = gaps_json(qg);
    j["breadth_i"] = br.breadth_i;
    j["breadth_j"] = br.breadth_j;
    j["breadth_identity"] = br.relation_holds;
    j["knight_move"] = km.ok;
    if (thin.thin) {
        auto prof = diagonal_profile(h, lee, sigma);
        j["profile"] = prof.to_json();
        nlohmann::json bj = nlohmann::json::object();
        for (auto& [k, v] : coefficients_b(prof, lee)) bj[std::to_string(k)] = v;
        j["b"] = bj;
        j["reconstructed_jones"] = reconstruct_jones(prof, lee).to_json();
    }
    if (json) {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << grid(h);
    std::cout << "signature: " << sigma << "\n";
    std::cout << "thin: " << (thin.thin ? "yes" : "no") << "\n";
    std::cout << "breadths: i " << br.breadth_i << ", j " << br.breadth_j << " (identity "
              << (br.relation_holds ? "holds" : "fails") << ")\n";
    std::cout << "differential gaps: " << dg.size() << ", quantum gaps: " << qg.size() << "\n";
    std::cout << "knight move: " << (km.ok ? "decomposes" : km.reason) << "\n";
    if (thin.thin) {
        auto prof = diagonal_profile(h, lee, sigma);
        std::cout << "reconstructed jones: " << reconstruct_jones(prof, lee).str("t") << "\n";
    }
    return 0;
}

int cmd_check_qa(const std::string& pd, long budget, bool json) {
    auto d = load_pd(pd);
    auto rep = obstruction_report(d);
    auto cert = qa_certify(d, budget);
    if (json) {
        nlohmann::json j = rep.to_json();
        j["certificate"] = cert.to_json();
        std::cout << j.dump(2) << "\n";
    } else {
        for (auto& c : rep.checks)
            std::cout << c.name << ": " << to_string(c.status)
                      << (c.witness.empty() ? "" : " (" + c.witness + ")") << "\n";
        std::cout << "verdict: " << rep.verdict() << "\n";
        std::cout << "certificate: "
                  << (cert.certified ? "quasi-alternating" : "indeterminate") << " ("
                  << cert.nodes_used << " nodes)\n";
    }
    return rep.violated() ? 1 : 0;
}

int cmd_kanenobu(int p, int q, bool json) {
    auto rep = kanenobu_verdict(p, q);
    if (json) {
        nlohmann::json j = rep.to_json();
        j["p"] = p;
        j["q"] = q;
        j["jones"] = kanenobu_jones(p, q).to_json();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "V_K(" << p << "," << q << ") = " << kanenobu_jones(p, q).str("t") << "\n";
        std::cout << "verdict: " << rep.verdict() << "\n";
    }
    return rep.violated() ? 1 : 0;
}

int cmd_corpus() {
    int failures = 0;
    for (const auto& f : fixtures()) {
        bool ok = true;
        std::string note;
        auto v = jones(f.diagram);
        if (f.diagram.crossing_count() <= kh_crossing_limit()) {
            auto h = khovanov(f.diagram);
            if (!euler_residual(h, v).is_zero()) {
                ok = false;
                note += " euler";
            }
            if (obstruction_report(f.diagram).violated()) {
                ok = false;
                note += " obstruction";
            }
        }
        auto cert = qa_certify(f.diagram, 10000);
        if (!cert.certified || !validate_certificate(cert.root)) {
            ok = false;
            note += " certificate";
        }
        std::printf("%-14s det %-3lld %s%s\n", f.name.c_str(), determinant_eval(v),
                    ok ? "ok" : "FAIL", note.c_str());
        if (!ok) failures++;
    }
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knot invariants and quasi-alternating obstructions"};
    app.require_subcommand(1);

    std::string pd, invariant = "all";
    long budget = 10000;
    int p = 0, q = 0;
    bool json = false;

    auto* compute = app.add_subcommand("compute", "bracket / jones / khovanov of a PD code");
    compute->add_option("--pd", pd, "PD text or file")->required();
    compute->add_option("--invariant", invariant)
        ->check(CLI::IsMember({"bracket", "jones", "khovanov", "all"}));
    compute->add_flag("--json", json);

    auto* analyze = app.add_subcommand("analyze", "homological analysis report");
    analyze->add_option("--pd", pd, "PD text or file")->required();
    analyze->add_flag("--json", json);

    auto* checkqa = app.add_subcommand("check-qa", "obstructions + certificate search");
    checkqa->add_option("--pd", pd, "PD text or file")->required();
    checkqa->add_option("--budget", budget, "search node budget");
    checkqa->add_flag("--json", json);

    auto* kan = app.add_subcommand("kanenobu", "closed-form Kanenobu verdict");
    kan->add_option("-p", p)->required();
    kan->add_option("-q", q)->required();
    kan->add_flag("--json", json);

    auto* corpus = app.add_subcommand("corpus", "run checks over the bundled fixtures");
    corpus->add_subcommand("run", "execute the suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (compute->parsed()) return cmd_compute(pd, invariant, json);
        if (analyze->parsed()) return cmd_analyze(pd, json);
        if (checkqa->parsed()) return cmd_check_qa(pd, budget, json);
        if (kan->parsed()) return cmd_kanenobu(p, q, json);
        if (corpus->parsed()) return cmd_corpus();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

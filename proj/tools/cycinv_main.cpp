#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycinv/classify.hpp"
#include "cycinv/oracle.hpp"
#include "cycinv/resolution.hpp"
#include "cycinv/sweep.hpp"

using namespace cycinv;

namespace {

long long pmax_limit() {
    const char* env = std::getenv("CYCINV_PMAX_LIMIT");
    if (!env) return 1000;
    return std::atoll(env);
}

void check_p_limit(long long p) {
    if (p > pmax_limit())
        throw CLI::ValidationError("p exceeds CYCINV_PMAX_LIMIT (" + std::to_string(pmax_limit()) + ")");
}

std::string slope_str(const Rational& s) { return s.str(); }

nlohmann::json points_json(const std::vector<ExponentPair>& pts) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : pts) j.push_back({e.c, e.d});
    return j;
}

struct ActionArgs {
    long long p = 0, a = 1, b = 0;
    std::string format = "table";

    void attach(CLI::App* cmd, std::initializer_list<std::string> formats) {
        cmd->add_option("--p", p, "Order of the group (prime)")->required();
        cmd->add_option("--a", a, "Weight on x1 (default 1)");
        cmd->add_option("--b", b, "Weight on x2")->required();
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember(std::vector<std::string>(formats)));
    }
    Action action() const {
        check_p_limit(p);
        return Action(p, a, b);
    }
};

int cmd_invariants(const ActionArgs& args) {
    Classification cls = classify(args.action());
    const InvariantSet& inv = cls.inv;
    auto fam = division_family(inv.p, inv.b);
    if (args.format == "json") {
        nlohmann::json j;
        j["p"] = inv.p;
        j["input_a"] = args.a;
        j["input_b"] = args.b;
        j["b"] = cls.action.b;
        j["b_inv"] = cls.action.b_inv;
        j["swapped"] = cls.action.swapped;
        j["points"] = points_json(inv.points);
        j["degrees"] = degrees(inv);
        nlohmann::json sl = nlohmann::json::array();
        for (const auto& s : cls.slope_set) sl.push_back(slope_str(s));
        j["slopes"] = sl;
        j["division_family"] = points_json(fam);
        j["division_family_complete"] = fam.size() == inv.size();
        std::cout << j.dump(2) << "\n";
    } else if (args.format == "csv") {
        std::cout << "c,d,degree\n";
        for (const auto& e : inv.points) std::cout << e.c << ',' << e.d << ',' << e.c + e.d << "\n";
    } else {
        std::cout << "action:      Z/" << inv.p << " with weights (" << args.a << ", " << args.b
                  << ")\n";
        std::cout << "canonical:   b = " << cls.action.b << ", b_inv = " << cls.action.b_inv
                  << (cls.action.swapped ? "  (variables swapped)" : "") << "\n";
        std::cout << "generators:  " << inv.size() << "\n";
        for (const auto& e : inv.points)
            std::cout << "  x1^" << e.c << " * x2^" << e.d << "   (degree " << e.c + e.d << ")\n";
        std::cout << "slopes:      {";
        bool first = true;
        for (const auto& s : cls.slope_set) {
            std::cout << (first ? "" : ", ") << slope_str(s);
            first = false;
        }
        std::cout << "}\n";
        std::cout << "division family (" << fam.size() << " of " << inv.size() << " generators):\n";
        for (const auto& e : fam) std::cout << "  (" << e.c << ", " << e.d << ")\n";
    }
    return 0;
}

int cmd_kernel(const ActionArgs& args) {
    Classification cls = classify(args.action());
    const InvariantSet& inv = cls.inv;
    Ideal K = toric_kernel(inv);
    MonomialOrder ord = presentation_order(inv);
    if (args.format == "json") {
        nlohmann::json j;
        j["p"] = inv.p;
        j["b"] = inv.b;
        j["variables"] = K.ring->vars;
        j["degrees"] = K.ring->degrees;
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : K.gens) gens.push_back(to_string(g, ord));
        j["generators"] = gens;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "presentation ring: C[";
        for (std::size_t i = 0; i < K.ring->nvars(); ++i)
            std::cout << (i ? ", " : "") << K.ring->vars[i];
        std::cout << "], degrees (";
        for (std::size_t i = 0; i < K.ring->nvars(); ++i)
            std::cout << (i ? ", " : "") << K.ring->degrees[i];
        std::cout << ")\n";
        std::cout << "kernel (" << K.gens.size() << " binomials, reduced Groebner basis):\n";
        for (const auto& g : K.gens) std::cout << "  " << to_string(g, ord) << "\n";
    }
    return 0;
}

PolyMatrix veronese_matrix(const InvariantSet& inv) {
    RingPtr R = presentation_ring(inv);
    std::size_t m = inv.size() - 1;
    PolyMatrix M = PolyMatrix::zero(R, {0, 0}, std::vector<long long>(m, inv.p));
    for (std::size_t c = 0; c < m; ++c) {
        M.entries[0][c] = Polynomial::variable(R, c);
        M.entries[1][c] = Polynomial::variable(R, c + 1);
    }
    return M;
}

int cmd_resolution(const ActionArgs& args, const std::string& method, bool verify) {
    Classification cls = classify(args.action());
    const InvariantSet& inv = cls.inv;
    long long p = inv.p, b = inv.b;
    Ideal K = toric_kernel(inv);

    auto closed_form = [&]() -> std::optional<Resolution> {
        if (cls.product == p + 1) return hilbert_burch(p, b).resolution;
        if (b == 1) return eagon_northcott(veronese_matrix(inv));
        if (cls.product == 2 * p + 1) return eagon_northcott(explicit_kernel_2p1(p, b).matrix);
        return std::nullopt;
    };

    Resolution res;
    if (method == "general") {
        res = minimal_free_resolution(K, presentation_order(inv));
    } else if (method == "hilbert-burch") {
        if (cls.product != p + 1)
            throw CLI::ValidationError("hilbert-burch requires (p-b)(p-b_inv) = p+1");
        res = hilbert_burch(p, b).resolution;
    } else if (method == "eagon-northcott") {
        if (b == 1)
            res = eagon_northcott(veronese_matrix(inv));
        else if (cls.product == 2 * p + 1)
            res = eagon_northcott(explicit_kernel_2p1(p, b).matrix);
        else
            throw CLI::ValidationError(
                "eagon-northcott requires b = 1 or (p-b)(p-b_inv) = 2p+1");
    } else { // auto
        res = minimal_free_resolution(K, presentation_order(inv));
        if (auto cf = closed_form()) {
            if (!(betti(res).entries == betti(*cf).entries))
                throw TheoremViolation("closed-form Betti table disagrees with the general computation");
        }
    }

    if (verify) {
        VerifyReport rep = verify_resolution(res, K, inv);
        if (!rep.ok) {
            for (const auto& f : rep.failures) std::cerr << "verification failure: " << f << "\n";
            throw TheoremViolation("resolution failed verification");
        }
    }

    if (args.format == "json") {
        nlohmann::json j = nlohmann::json::parse(resolution_to_json(res));
        j["p"] = p;
        j["b"] = b;
        j["method"] = method;
        nlohmann::json bt = nlohmann::json::array();
        for (const auto& [key, v] : betti(res).entries)
            bt.push_back({{"i", key.first}, {"twist", key.second}, {"rank", v}});
        j["betti"] = bt;
        if (verify) j["verified"] = true;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "minimal free resolution, length " << res.length() << ":\n";
        for (std::size_t i = 0; i < res.modules.size(); ++i) {
            std::cout << "  F" << i << " twists: {";
            for (std::size_t k = 0; k < res.modules[i].twists.size(); ++k)
                std::cout << (k ? ", " : "") << res.modules[i].twists[k];
            std::cout << "}\n";
        }
        std::cout << "betti table:\n" << betti_table_text(betti(res));
        if (verify) std::cout << "verification: ok\n";
    }
    return 0;
}

int cmd_classify(const ActionArgs& args) {
    Classification cls = classify(args.action());
    if (args.format == "json") {
        nlohmann::json j;
        j["p"] = cls.action.p;
        j["b"] = cls.action.b;
        j["b_inv"] = cls.action.b_inv;
        j["swapped"] = cls.action.swapped;
        j["label"] = to_string(cls.kind);
        j["product"] = cls.product;
        j["k"] = cls.k;
        j["n_invariants"] = cls.inv.size();
        j["n_slopes"] = cls.slope_set.size();
        j["q"] = cls.div.q;
        j["r"] = cls.div.r;
        j["s"] = cls.div.s;
        j["t"] = cls.div.t;
        j["points"] = points_json(cls.inv.points);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "p = " << cls.action.p << ", b = " << cls.action.b
                  << ", b_inv = " << cls.action.b_inv << "\n";
        std::cout << "label:        " << to_string(cls.kind) << "\n";
        std::cout << "product:      (p-b)(p-b_inv) = " << cls.product << " = " << cls.k << "p + 1\n";
        std::cout << "generators:   " << cls.inv.size() << "\n";
        std::cout << "slopes:       " << cls.slope_set.size() << "\n";
        std::cout << "division:     p = b*" << cls.div.q << " + " << cls.div.r << ", p = b_inv*"
                  << cls.div.s << " + " << cls.div.t << "\n";
    }
    return 0;
}

int cmd_sweep(long long p_max, int jobs, bool oracle, const std::string& format) {
    if (p_max > pmax_limit())
        throw CLI::ValidationError("p-max exceeds CYCINV_PMAX_LIMIT (" + std::to_string(pmax_limit()) + ")");
    auto rows = run_sweep(p_max, jobs, oracle);
    if (format == "json") {
        std::cout << sweep_to_json(rows) << "\n";
    } else if (format == "table") {
        std::cout << "p     b     b_inv product  k   #inv  #slopes label\n";
        for (const auto& r : rows) {
            auto pad = [](long long v, int w) {
                std::string s = std::to_string(v);
                while ((int)s.size() < w) s += ' ';
                return s;
            };
            std::cout << pad(r.p, 6) << pad(r.b, 6) << pad(r.b_inv, 6) << pad(r.product, 9)
                      << pad(r.k, 4) << pad(r.n_invariants, 6) << pad(r.n_slopes, 8) << r.label
                      << "\n";
        }
    } else {
        std::cout << sweep_to_csv(rows);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariant rings of cyclic group actions on C[x1,x2]: generators, toric "
                 "presentations, minimal free resolutions, classification"};
    app.require_subcommand(1);

    ActionArgs inv_args, ker_args, res_args, cls_args;
    std::string method = "auto";
    bool verify = false;
    long long p_max = 0;
    int jobs = 1;
    bool oracle = false;
    std::string sweep_format = "csv";

    auto* c_inv = app.add_subcommand("invariants", "Minimal generating invariant monomials");
    inv_args.attach(c_inv, {"table", "json", "csv"});

    auto* c_ker = app.add_subcommand("kernel", "Toric presentation kernel (reduced Groebner basis)");
    ker_args.attach(c_ker, {"table", "json"});

    auto* c_res = app.add_subcommand("resolution", "Minimal graded free resolution");
    res_args.attach(c_res, {"table", "json"});
    c_res->add_option("--method", method, "general | hilbert-burch | eagon-northcott | auto")
        ->check(CLI::IsMember({"general", "hilbert-burch", "eagon-northcott", "auto"}));
    c_res->add_flag("--verify", verify, "Audit the result against the brute-force checker");

    auto* c_cls = app.add_subcommand("classify", "Structural classification of the action");
    cls_args.attach(c_cls, {"table", "json"});

    auto* c_swp = app.add_subcommand("sweep", "Classify all canonical actions with p <= p-max");
    c_swp->add_option("--p-max", p_max, "Largest prime to include")->required();
    c_swp->add_option("--jobs", jobs, "Worker threads");
    c_swp->add_flag("--oracle", oracle, "Re-derive invariant sets by brute sieve");
    c_swp->add_option("--format", sweep_format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    try {
        app.parse(argc, argv);
        if (c_inv->parsed()) return cmd_invariants(inv_args);
        if (c_ker->parsed()) return cmd_kernel(ker_args);
        if (c_res->parsed()) return cmd_resolution(res_args, method, verify);
        if (c_cls->parsed()) return cmd_classify(cls_args);
        if (c_swp->parsed()) return cmd_sweep(p_max, jobs, oracle, sweep_format);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const TheoremViolation& e) {
        std::cerr << "internal consistency violation: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

#include "bsym/cli.hpp"

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bsym/bweight.hpp"
#include "bsym/families.hpp"
#include "bsym/io.hpp"
#include "bsym/isometry.hpp"
#include "bsym/mds.hpp"
#include "bsym/towers.hpp"

namespace bsym {

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os.str();
}

void print_verdict(std::ostream& out, const char* prefix, int b, const MdsVerdict& v) {
    out << prefix << "MDS b=" << b << ": " << (v.is_mds ? "yes" : "no");
    if (!v.is_mds) {
        if (v.witness_codeword) out << " witness=codeword " << join(*v.witness_codeword);
        if (v.witness_set) out << " witness=J {" << join(*v.witness_set) << "}";
    }
    out << '\n';
}

int run_analyze(std::ostream& out, const std::string& path, int b, const Caps& caps) {
    LinearCode c = load_code_file(path);
    BWeightMatrix D = d_matrix(c, caps);
    if (b < 1 || b > c.n()) throw DomainError("window length out of range");
    out << "n " << c.n() << '\n';
    out << "k " << c.k() << '\n';
    out << "q " << c.field().q() << '\n';
    out << "b " << b << '\n';
    out << "d";
    for (int r = 1; r <= c.k(); ++r) out << ' ' << D.at(b, r);
    out << '\n';
    return 0;
}

int run_dmatrix(std::ostream& out, const std::string& path, const Caps& caps) {
    LinearCode c = load_code_file(path);
    out << d_matrix(c, caps).to_text();
    return 0;
}

int run_mds(std::ostream& out, const std::string& path, int b, const std::string& criterion,
            const Caps& caps) {
    LinearCode c = load_code_file(path);
    if (criterion == "direct") {
        print_verdict(out, "", b, is_b_mds_direct(c, b, caps));
    } else if (criterion == "generator") {
        print_verdict(out, "", b, is_b_mds_generator(c, b, caps));
    } else if (criterion == "parity") {
        print_verdict(out, "", b, is_b_mds_parity(c, b, caps));
    } else {
        MdsVerdict d = is_b_mds_direct(c, b, caps);
        MdsVerdict g = is_b_mds_generator(c, b, caps);
        MdsVerdict p = is_b_mds_parity(c, b, caps);
        print_verdict(out, "direct: ", b, d);
        print_verdict(out, "generator: ", b, g);
        print_verdict(out, "parity: ", b, p);
        if (d.is_mds != g.is_mds || d.is_mds != p.is_mds) {
            out << "agreement: FAILED\n";
            throw InvariantViolation("criteria disagree");
        }
        out << "agreement: ok\n";
    }
    return 0;
}

int run_isometry(std::ostream& out, const std::string& path_a, const std::string& path_b,
                 const std::string& path_phi, int b, const Caps& caps) {
    LinearCode ca = load_code_file(path_a);
    LinearCode cb = load_code_file(path_b);
    FqMatrix phi = load_matrix_file(path_phi);
    PreserveReport rep = preserves_b_weight(ca, cb, phi, b, caps);
    out << "sums-constant: " << (rep.sums_constant ? "yes" : "no") << '\n';
    out << "witness-weights: " << rep.witness_weight << ' ' << rep.witness_image_weight << '\n';
    out << "verdict: " << (rep.preserves ? "preserves" : "differs") << '\n';
    try {
        bool brute = brute_force_preserves(ca, phi, b, caps);
        out << "brute-force: " << (brute ? "preserves" : "differs") << '\n';
        if (brute != rep.preserves) {
            out << "agreement: FAILED\n";
            throw InvariantViolation("isometry verdict disagrees with brute force");
        }
        out << "agreement: ok\n";
    } catch (const CapExceeded&) {
        out << "brute-force: skipped (cap)\n";
    }
    return 0;
}

// "p^m" (or plain "p") -> (p, m)
std::pair<int, int> parse_field_spec(const std::string& s) {
    size_t caret = s.find('^');
    try {
        int p = std::stoi(s.substr(0, caret));
        int m = caret == std::string::npos ? 1 : std::stoi(s.substr(caret + 1));
        if (p < 2 || m < 1) throw DomainError("bad field spec: " + s);
        return {p, m};
    } catch (const std::invalid_argument&) {
        throw DomainError("bad field spec: " + s);
    } catch (const std::out_of_range&) {
        throw DomainError("bad field spec: " + s);
    }
}

int run_tower(std::ostream& out, const std::string& path, const std::string& op, int m,
              const std::string& base_spec, const std::string& ext_spec, const Caps& caps) {
    LinearCode c = load_code_file(path);
    (void)caps;
    if (!base_spec.empty()) {
        auto [p, bm] = parse_field_spec(base_spec);
        if (p != c.field().p()) throw DomainError("not a subfield");
        m = bm;
    }
    if (!ext_spec.empty()) {
        auto [p, em] = parse_field_spec(ext_spec);
        if (p != c.field().p() || em % c.field().e() != 0) throw DomainError("not a subfield");
        if (op == "extend") m = em / c.field().e();
    }
    if (op == "subcode") {
        int dim = subfield_subcode_dim(c, m);
        out << "dim " << dim << '\n';
        if (dim > 0) out << format_code(subfield_subcode(c, m));
    } else if (op == "ess") {
        out << "ess " << essential_number(c) << '\n';
    } else if (op == "extend") {
        out << format_code(extend_code(c, m));
    } else if (op == "trace") {
        const Field& base = Field::get(c.field().p(), m);
        out << format_code(trace_code(c, base));
    } else {
        throw DomainError("unknown tower op");
    }
    return 0;
}

int run_family(std::ostream& out, const std::string& which, int q, int k, const Caps& caps) {
    int p = q, e = 1;
    // factor q = p^e with p prime
    for (int cand = 2; cand * cand <= q; ++cand) {
        if (q % cand == 0) {
            p = cand;
            e = 0;
            int t = q;
            while (t % cand == 0) {
                t /= cand;
                ++e;
            }
            if (t != 1) throw DomainError("q is not a prime power");
            break;
        }
    }
    const Field& f = Field::get(p, e);
    LinearCode c = which == "simplex" ? simplex_code(f, k, caps) : hamming_code(f, k, caps);
    out << format_code(c);
    return 0;
}

// --- selfcheck ------------------------------------------------------------

LinearCode random_code(std::mt19937& rng, const Field& f, int n, int k) {
    for (;;) {
        FqMatrix g(f, k, n);
        bool nonzero = false;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) {
                int v = (int)(rng() % f.q());
                g.set(i, j, v);
                nonzero = nonzero || v != 0;
            }
        if (nonzero) return LinearCode::from_generator(g);
    }
}

int run_selfcheck(std::ostream& out, const Caps& caps) {
    bool ok = true;
    auto report = [&](const std::string& name, bool pass, const std::string& note = "") {
        out << (pass ? "ok " : "FAIL ") << name;
        if (!pass && !note.empty()) out << " (" << note << ")";
        out << '\n';
        ok = ok && pass;
    };

    const Field& f2 = Field::get(2, 1);
    const Field& f3 = Field::get(3, 1);
    LinearCode pinned = LinearCode::from_generator(FqMatrix(f2, 1, 3, {1, 0, 1}));
    LinearCode pinned_dual = pinned.dual();

    std::vector<LinearCode> corpus{pinned,
                                   pinned_dual,
                                   hamming_code(f2, 3),
                                   simplex_code(f2, 3),
                                   simplex_code(f3, 2),
                                   LinearCode::from_generator(FqMatrix::identity(f2, 3))};
    std::mt19937 rng(20240901);
    for (int i = 0; i < 24; ++i) {
        const Field& f = (rng() % 2) ? f3 : f2;
        int n = 2 + (int)(rng() % 5);
        int k = 1 + (int)(rng() % n);
        corpus.push_back(random_code(rng, f, n, k));
    }

    // pinned asymmetry: the length-3 code is 2-MDS, its dual is not
    report("pinned-2-mds", is_b_mds_direct(pinned, 2, caps).is_mds);
    report("pinned-dual-not-2-mds", !is_b_mds_direct(pinned_dual, 2, caps).is_mds);

    for (size_t ci = 0; ci < corpus.size(); ++ci) {
        const LinearCode& c = corpus[ci];
        std::string tag = "corpus[" + std::to_string(ci) + "]";
        try {
            auto clauses = check_bound_theorems(c, caps);
            for (const auto& cl : clauses)
                if (!cl.pass) report(tag + " " + cl.clause, false, cl.note);
            report(tag + " bound-theorems", all_pass(clauses));
            bool agree = true;
            for (int b = 1; b <= c.n() && agree; ++b) {
                bool d = is_b_mds_direct(c, b, caps).is_mds;
                bool g = is_b_mds_generator(c, b, caps).is_mds;
                bool p = is_b_mds_parity(c, b, caps).is_mds;
                agree = (d == g && d == p);
            }
            report(tag + " criteria-agree", agree);
        } catch (const std::exception& ex) {
            report(tag, false, ex.what());
        }
    }

    for (int k = 2; k <= 4; ++k)
        report("incidence-identities q=2 k=" + std::to_string(k),
               all_pass(check_incidence_identities(f2, k, caps)));
    for (int k = 2; k <= 3; ++k)
        report("incidence-identities q=3 k=" + std::to_string(k),
               all_pass(check_incidence_identities(f3, k, caps)));

    out << (ok ? "selfcheck passed\n" : "selfcheck FAILED\n");
    if (!ok) throw InvariantViolation("selfcheck failed");
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact b-symbol weight analysis for linear codes over finite fields"};
    app.require_subcommand(1);

    Caps caps;
    app.add_option("--cap-codewords", caps.max_codewords, "codeword enumeration cap");
    app.add_option("--cap-subspaces", caps.max_subspaces, "subspace/subset enumeration cap");

    std::string path, path_b, path_phi, criterion = "all", op, which, base_spec, ext_spec;
    int b = 1, m = 1, q = 2, kk = 1;

    auto* analyze = app.add_subcommand("analyze", "print n, k, q and the b-th weight row");
    analyze->add_option("codefile", path)->required();
    analyze->add_option("--b", b, "window length")->required();

    auto* dmx = app.add_subcommand("dmatrix", "print the full weight matrix");
    dmx->add_option("codefile", path)->required();

    auto* mds = app.add_subcommand("mds", "decide b-MDS by one or all criteria");
    mds->add_option("codefile", path)->required();
    mds->add_option("--b", b, "window length")->required();
    mds->add_option("--criterion", criterion)
        ->check(CLI::IsMember({"direct", "generator", "parity", "all"}));

    auto* iso = app.add_subcommand("isometry", "decide b-weight preservation of a map");
    iso->add_option("codefileA", path)->required();
    iso->add_option("codefileB", path_b)->required();
    iso->add_option("phifile", path_phi)->required();
    iso->add_option("--b", b, "window length")->required();

    auto* tower = app.add_subcommand("tower", "subfield/extension operations");
    tower->add_option("codefile", path)->required();
    tower->add_option("--op", op)->required()->check(
        CLI::IsMember({"subcode", "ess", "extend", "trace"}));
    tower->add_option("--m", m, "subfield degree or extension multiplier");
    tower->add_option("--base", base_spec, "base field as p^m (subcode/trace)");
    tower->add_option("--ext", ext_spec, "extension field as p^e (extend)");

    auto* family = app.add_subcommand("family", "emit a simplex or Hamming code file");
    family->add_option("which", which)->required()->check(CLI::IsMember({"simplex", "hamming"}));
    family->add_option("q", q)->required();
    family->add_option("k", kk)->required();

    auto* selfcheck = app.add_subcommand("selfcheck", "run the built-in verification corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << '\n';
        return 1;
    }

    try {
        if (analyze->parsed()) return run_analyze(out, path, b, caps);
        if (dmx->parsed()) return run_dmatrix(out, path, caps);
        if (mds->parsed()) return run_mds(out, path, b, criterion, caps);
        if (iso->parsed()) return run_isometry(out, path, path_b, path_phi, b, caps);
        if (tower->parsed()) return run_tower(out, path, op, m, base_spec, ext_spec, caps);
        if (family->parsed()) return run_family(out, which, q, kk, caps);
        if (selfcheck->parsed()) return run_selfcheck(out, caps);
    } catch (const ParseError& ex) {
        err << "parse error: " << ex.what() << '\n';
        return 2;
    } catch (const CapExceeded& ex) {
        err << "cap exceeded: " << ex.what() << '\n';
        return 3;
    } catch (const InvariantViolation& ex) {
        err << "invariant violation: " << ex.what() << '\n';
        return 4;
    } catch (const DomainError& ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    }
    return 1;
}

}  // namespace bsym

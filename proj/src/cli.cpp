#include "sds/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "sds/examples_data.hpp"
#include "sds/operators.hpp"
#include "sds/registers.hpp"
#include "sds/stgc.hpp"
#include "sds/zmseq.hpp"

namespace sds::cli {

namespace {

// Either a file stream or the shared stdout/stdin stream.
std::ostream& open_out(const std::string& path, std::ostream& fallback, std::ofstream& file) {
    if (path.empty())
        return fallback;
    file.open(path);
    if (!file)
        throw error("cannot open output file: " + path);
    return file;
}

std::vector<CyclicSeq> read_input(const std::string& path, int default_modulus) {
    if (path.empty())
        return read_sequences(std::cin, default_modulus);
    std::ifstream in(path);
    if (!in)
        throw error("cannot open input file: " + path);
    return read_sequences(in, default_modulus);
}

// Register cycles reduced to their periods, shortest first.
std::vector<CyclicSeq> sorted_cycles(const std::set<CyclicSeq>& cycles) {
    std::vector<CyclicSeq> out;
    for (const CyclicSeq& c : cycles)
        out.push_back(reduce_to_period(c));
    std::sort(out.begin(), out.end(), [](const CyclicSeq& a, const CyclicSeq& b) {
        return std::make_pair(a.length(), a.elems) < std::make_pair(b.length(), b.elems);
    });
    return out;
}

int cmd_ccr(int n, int r, const std::string& out_path, std::ostream& out) {
    std::ofstream file;
    std::ostream& os = open_out(out_path, out, file);
    for (const CyclicSeq& c : sorted_cycles(fsr_cycles(ccr(2, n, r))))
        os << to_string(c) << "\n";
    return 0;
}

int cmd_mccr(int m, int n, int r, const std::string& out_path, std::ostream& out) {
    std::ofstream file;
    std::ostream& os = open_out(out_path, out, file);
    os << "# m=" << m << "\n";
    for (const CyclicSeq& c : sorted_cycles(fsr_cycles(ccr(m, n, r))))
        os << to_string(c) << "\n";
    return 0;
}

int cmd_counts(int m, int n, bool identity, int i, int p, std::ostream& out) {
    if (identity) {
        if (n < 1)
            throw error("counts --identity needs --n");
        if (m == 2) {
            IdentityReport rep = verify_count_identity(n);
            out << rep.to_text() << "\n";
            return rep.pass ? 0 : 1;
        }
        MccrIdentityReport rep = verify_mccr_identity(m, n);
        out << rep.to_text() << "\n";
        return rep.paper_matches || rep.plain_matches ? 0 : 1;
    }
    if (i > 0 || p > 0) {
        if (i < 1 || p < 3)
            throw error("counts: period buckets need --i >= 1 and an odd prime --p");
        out << count_ccr_by_period(i, p).to_text() << "\n";
        return 0;
    }
    if (n < 1)
        throw error("counts needs --n");
    bigint formula = count_mccr_formula(m, n);
    bool brute_ok = true;
    {
        long long states = 1;
        for (int k = 0; k < n && brute_ok; ++k) {
            states *= m;
            brute_ok = states <= 10'000'000;
        }
    }
    if (brute_ok) {
        CountReport rep;
        rep.modulus = m;
        rep.order = n;
        rep.source = "brute";
        for (const CyclicSeq& c : fsr_cycles(ccr(m, n))) {
            ++rep.by_period[period(c)];
            ++rep.total;
        }
        out << rep.to_text() << "\n";
        out << "formula=" << formula << " " << (rep.total == formula ? "(match)" : "(MISMATCH)")
            << "\n";
        return rep.total == formula ? 0 : 1;
    }
    CountReport rep;
    rep.modulus = m;
    rep.order = n;
    rep.total = formula;
    rep.source = "formula";
    out << rep.to_text() << "\n";
    return 0;
}

int cmd_delta(int m, int block, const std::string& in_path, const std::string& out_path,
              std::ostream& out) {
    std::vector<CyclicSeq> seqs = read_input(in_path, m);
    std::vector<CyclicSeq> res;
    for (const CyclicSeq& s : seqs)
        res.push_back(delta(s, block));
    std::ofstream file;
    write_sequences(open_out(out_path, out, file), res, m);
    return 0;
}

int cmd_dinv(int m, int block, const std::string& y_text, const std::string& in_path,
             const std::string& out_path, std::ostream& out) {
    Word y = word_from_string(m, y_text);
    std::vector<CyclicSeq> seqs = read_input(in_path, m);
    std::vector<CyclicSeq> res;
    for (const CyclicSeq& s : seqs)
        res.push_back(delta_inv(s, block, y));
    std::ofstream file;
    write_sequences(open_out(out_path, out, file), res, m);
    return 0;
}

int cmd_recurse(int n, const std::string& in_path, const std::string& out_path,
                std::ostream& out) {
    std::set<CyclicSeq> in_set;
    for (const CyclicSeq& s : read_input(in_path, 2))
        in_set.insert(materialize(s, 2 * static_cast<std::size_t>(n)));
    std::set<CyclicSeq> res = recurse_ccr_sds(in_set, n);
    std::ofstream file;
    write_sequences(open_out(out_path, out, file),
                    std::vector<CyclicSeq>(res.begin(), res.end()), 2);
    return 0;
}

int cmd_verify(const std::string& in_path, std::ostream& out) {
    Stgc code;
    if (in_path.empty()) {
        code = read_stgc(std::cin);
    } else {
        std::ifstream in(in_path);
        if (!in)
            throw error("cannot open input file: " + in_path);
        code = read_stgc(in);
    }
    StgcReport rep = verify_stgc(code);
    out << "m=" << code.modulus << " n=" << code.length << " P=" << code.period() << "\n";
    out << rep.to_text() << "\n";
    return rep.pass() ? 0 : 1;
}

int cmd_examples(int id, std::ostream& out, std::ostream& err);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"self-dual sequence and single-track Gray code toolkit"};
    app.require_subcommand(1);

    int n = 0, m = 2, r = 1, p = 0, t = 1, i = 0, id = 0, block = 0;
    long ell = 1;
    bool identity = false;
    std::string in_path, out_path, y_text;

    auto* c_ccr = app.add_subcommand("ccr", "cycles of the binary CCR_n");
    c_ccr->add_option("--n", n)->required();
    c_ccr->add_option("--r", r);
    c_ccr->add_option("--out", out_path);

    auto* c_mccr = app.add_subcommand("mccr", "cycles of the m-CCR_n");
    c_mccr->add_option("--m", m)->required();
    c_mccr->add_option("--n", n)->required();
    c_mccr->add_option("--r", r);
    c_mccr->add_option("--out", out_path);

    auto* c_counts = app.add_subcommand("counts", "cycle counts, identities, period buckets");
    c_counts->add_option("--n", n);
    c_counts->add_option("--m", m);
    c_counts->add_flag("--identity", identity);
    c_counts->add_option("--i", i);
    c_counts->add_option("--p", p);

    auto* c_delta = app.add_subcommand("delta", "blockwise difference of input sequences");
    c_delta->add_option("--block", block)->required();
    c_delta->add_option("--m", m);
    c_delta->add_option("--in", in_path);
    c_delta->add_option("--out", out_path);

    auto* c_dinv = app.add_subcommand("dinv", "blockwise inverse difference with free word Y");
    c_dinv->add_option("--block", block)->required();
    c_dinv->add_option("--y", y_text)->required();
    c_dinv->add_option("--m", m);
    c_dinv->add_option("--in", in_path);
    c_dinv->add_option("--out", out_path);

    auto* c_recurse =
        app.add_subcommand("recurse", "CCR_n cycle set to the full CCR_2n cycle set");
    c_recurse->add_option("--n", n)->required();
    c_recurse->add_option("--in", in_path);
    c_recurse->add_option("--out", out_path);

    auto* c_bdiff = app.add_subcommand("build-diff", "difference construction, period m^m");
    c_bdiff->add_option("--m", m)->required();
    c_bdiff->add_option("--out", out_path);

    auto* c_brec = app.add_subcommand("build-rec", "recursive code of length p^t, period p^(p^t)");
    c_brec->add_option("--p", p)->required();
    c_brec->add_option("--t", t)->required();
    c_brec->add_option("--out", out_path);

    auto* c_bthm = app.add_subcommand(
        "build-thm", "ordering-based construction from input sequences (single-coordinate "
                     "consecutive differences: rotation rows; otherwise: window rows)");
    c_bthm->add_option("--ell", ell)->required();
    c_bthm->add_option("--m", m);
    c_bthm->add_option("--in", in_path);
    c_bthm->add_option("--out", out_path);

    auto* c_verify = app.add_subcommand("verify", "verify a single-track Gray code file");
    c_verify->add_option("file", in_path);
    c_verify->add_option("--in", in_path);

    auto* c_search = app.add_subcommand("search-thm3", "exhaustive length-p period 2^p-2 search");
    c_search->add_option("--p", p)->required();
    c_search->add_option("--out", out_path);

    auto* c_examples = app.add_subcommand("examples", "regenerate embedded worked examples");
    c_examples->add_option("--id", id)->required()->check(CLI::IsMember({1, 3, 4}));

    std::vector<const char*> argv;
    argv.push_back("sds");
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (c_ccr->parsed())
            return cmd_ccr(n, r, out_path, out);
        if (c_mccr->parsed())
            return cmd_mccr(m, n, r, out_path, out);
        if (c_counts->parsed())
            return cmd_counts(m, n, identity, i, p, out);
        if (c_delta->parsed())
            return cmd_delta(m, block, in_path, out_path, out);
        if (c_dinv->parsed())
            return cmd_dinv(m, block, y_text, in_path, out_path, out);
        if (c_recurse->parsed())
            return cmd_recurse(n, in_path, out_path, out);
        if (c_bdiff->parsed()) {
            std::ofstream file;
            write_stgc(open_out(out_path, out, file), build_diff_stgc(m));
            return 0;
        }
        if (c_brec->parsed()) {
            std::ofstream file;
            write_stgc(open_out(out_path, out, file), build_recursive_stgc(p, t));
            return 0;
        }
        if (c_bthm->parsed()) {
            std::vector<CyclicSeq> seqs = read_input(in_path, m);
            if (seqs.size() < 1)
                throw error("build-thm: no input sequences");
            Stgc code;
            if (seqs.size() >= 2 &&
                hamming(Word{m, seqs[0].elems}, Word{m, seqs[1].elems}) == 1) {
                code = construct_thm3(seqs, ell);
            } else {
                SdsOrdering ordering{m, seqs, ell};
                code = m == 2 ? construct_thm4(ordering) : construct_thm7(ordering);
            }
            std::ofstream file;
            write_stgc(open_out(out_path, out, file), code);
            return 0;
        }
        if (c_verify->parsed())
            return cmd_verify(in_path, out);
        if (c_search->parsed()) {
            auto code = search_thm3_max_period(p);
            if (!code) {
                err << "search-thm3: no ordering found for p=" << p << "\n";
                return 1;
            }
            std::ofstream file;
            write_stgc(open_out(out_path, out, file), *code);
            return 0;
        }
        if (c_examples->parsed())
            return cmd_examples(id, out, err);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

namespace {

bool check_lines(const std::string& what, const std::vector<std::string>& got,
                 const std::vector<std::string>& want, std::ostream& out, std::ostream& err) {
    if (got == want) {
        out << what << ": OK (" << want.size() << " rows)\n";
        return true;
    }
    err << what << ": MISMATCH\n";
    for (std::size_t i = 0; i < std::max(got.size(), want.size()); ++i) {
        const std::string g = i < got.size() ? got[i] : "<missing>";
        const std::string w = i < want.size() ? want[i] : "<missing>";
        if (g != w)
            err << "  row " << i << ": got " << g << " want " << w << "\n";
    }
    return false;
}

bool check_classes(const std::string& what, const std::set<CyclicSeq>& got,
                   const std::vector<std::string>& want_raw, int m, std::ostream& out,
                   std::ostream& err) {
    std::set<CyclicSeq> want;
    for (const std::string& s : want_raw)
        want.insert(canonical(seq_from_string(m, s)));
    if (got == want) {
        out << what << ": OK (" << want.size() << " classes)\n";
        return true;
    }
    err << what << ": MISMATCH\n  got:";
    for (const CyclicSeq& s : got)
        err << " " << to_string(s);
    err << "\n  want:";
    for (const CyclicSeq& s : want)
        err << " " << to_string(s);
    err << "\n";
    return false;
}

int cmd_example1(std::ostream& out, std::ostream& err) {
    bool ok = true;

    // Blockwise inverse differences of [000111]: Y in {000,001,010,011}
    // reproduce the published alignments verbatim.
    CyclicSeq src = seq_from_string(2, "000111");
    std::vector<std::string> got;
    for (const std::string& y : {"000", "001", "010", "011"})
        got.push_back(to_string(delta_inv(src, 3, word_from_string(2, y))));
    ok &= check_lines("example 1: block-3 inverse differences of 000111", got,
                      fixtures::example1_delta3inv_000111(), out, err);

    // Inverse differences of [01] at length 6: the period-4 and period-12
    // classes.
    CyclicSeq alt = materialize(seq_from_string(2, "01"), 6);
    std::set<CyclicSeq> classes;
    for (int bits = 0; bits < 8; ++bits) {
        Word y{2, digits{static_cast<digit>(bits >> 2 & 1), static_cast<digit>(bits >> 1 & 1),
                         static_cast<digit>(bits & 1)}};
        classes.insert(canonical(reduce_to_period(delta_inv(alt, 3, y))));
    }
    ok &= check_classes("example 1: block-3 inverse differences of 01", classes,
                        {fixtures::example1_dinv01_period4(), fixtures::example1_dinv01_period12()},
                        2, out, err);

    // The two period-8 self-dual classes.
    ok &= check_classes("example 1: period-8 self-dual classes", enumerate_sds(2, 8),
                        fixtures::example1_period8_sds(), 2, out, err);
    return ok ? 0 : 1;
}

int cmd_example3(std::ostream& out, std::ostream& err) {
    const auto& fx = fixtures::example3();
    std::vector<CyclicSeq> seqs;
    for (const std::string& s : fx.sds)
        seqs.push_back(seq_from_string(3, s));

    std::vector<std::string> left(9), wide(9);
    for (int i = 0; i < 9; ++i)
        for (int c = 0; c < 27; ++c) {
            int k = c / 3, j = c % 3;
            char ch = static_cast<char>('0' + seqs[j].elems[(i + k * fx.ell) % 9]);
            if (k == 0)
                left[i].push_back(ch);
            wide[i].push_back(ch);
        }
    bool ok = check_lines("example 3: sequence block", left, fx.left_block, out, err);
    ok &= check_lines("example 3: full rotation array", wide, fx.wide_block, out, err);

    Stgc code = construct_thm7(SdsOrdering{3, seqs, fx.ell});
    StgcReport rep = verify_stgc(code);
    out << "example 3: code m=3 n=3 P=" << code.period() << " "
        << (rep.pass() && code.period() == 27 ? "OK" : "FAIL") << "\n";
    return ok && rep.pass() && code.period() == 27 ? 0 : 1;
}

int cmd_example4(std::ostream& out, std::ostream& err) {
    const auto& fx = fixtures::example4();
    DiffConstruction dc = build_diff_construction(4);

    std::vector<std::string> diff_rows(4), sds_rows(16);
    for (std::size_t j = 0; j < dc.diffs.size(); ++j)
        for (int i = 0; i < 4; ++i)
            diff_rows[i].push_back(static_cast<char>('0' + dc.diffs[j].elems[i]));
    for (std::size_t j = 0; j < dc.ordering.seqs.size(); ++j)
        for (int i = 0; i < 16; ++i)
            sds_rows[i].push_back(static_cast<char>('0' + dc.ordering.seqs[j].elems[i]));

    bool ok = check_lines("example 4: difference table", diff_rows, fx.diff_rows, out, err);
    ok &= check_lines("example 4: sequence table", sds_rows, fx.sds_rows, out, err);

    StgcReport rep = verify_stgc(dc.code);
    out << "example 4: code m=4 n=4 P=" << dc.code.period() << " "
        << (rep.pass() && dc.code.period() == 256 ? "OK" : "FAIL") << "\n";
    return ok && rep.pass() && dc.code.period() == 256 ? 0 : 1;
}

int cmd_examples(int id, std::ostream& out, std::ostream& err) {
    switch (id) {
    case 1:
        return cmd_example1(out, err);
    case 3:
        return cmd_example3(out, err);
    case 4:
        return cmd_example4(out, err);
    default:
        throw error("examples: unknown id " + std::to_string(id));
    }
}

}  // namespace

}  // namespace sds::cli

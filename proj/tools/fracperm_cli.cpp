// Command line front end: verify catalog families, run the curve audits,
// or check a one-off map over a chosen field or norm-one subgroup.
//
// Exit codes: 0 all claims hold, 1 a definite claim failed, 2 usage or
// input error, 3 a work cap was exceeded.

#include "CLI11.hpp"

#include <fracperm/families.hpp>

#include <cstdio>
#include <iostream>

using namespace fracperm;

namespace {

struct Options {
    std::string data_path;
    std::string format = "text";
    unsigned workers = 1;
};

void emit(const Record& rec) { std::cout << rec.line() << "\n"; }

int run_verify(const Options& opt, const std::string& family, std::vector<u64> sizes,
               const std::vector<i64>& params) {
    Families fams(load_catalog_data(opt.data_path));
    const FamilyInfo* info = nullptr;
    for (auto& f : catalog())
        if (f.id == family) info = &f;
    if (!info) throw ParseError("unknown family: " + family);
    if (sizes.empty()) sizes = info->default_sizes;
    size_t count = 0, bad = 0;
    for (u64 s : sizes) {
        for (auto& o : fams.verify_family(family, params, s, opt.workers)) {
            emit(o.record);
            ++count;
            if (o.mismatch) {
                ++bad;
                std::cerr << "claim failed: " << o.record.line() << "\n";
            }
        }
    }
    if (opt.format == "text")
        std::cout << "summary: " << count << " records, " << bad << " claim failures\n";
    return bad ? 1 : 0;
}

int run_verify_all(const Options& opt, u64 max_cost, bool audits) {
    Families fams(load_catalog_data(opt.data_path));
    size_t count = 0, bad = 0, skipped = 0;
    for (auto& info : catalog()) {
        for (u64 s : info.default_sizes) {
            if (instance_cost(info.id, s) > max_cost) {
                ++skipped;
                continue;
            }
            for (auto& o : fams.verify_family(info.id, {}, s, opt.workers)) {
                emit(o.record);
                ++count;
                if (o.mismatch) {
                    ++bad;
                    std::cerr << "claim failed: " << o.record.line() << "\n";
                }
            }
        }
    }
    if (audits) {
        for (auto& c : fams.data().factorizations) {
            FactOutcome fo = fams.verify_factorization(c);
            Record rec{c.id, c.p, c.n, "curve", fo.ok ? "match" : "no-match",
                       fo.ok ? "w" + std::to_string(fo.omega) : "-", fo.elapsed_us};
            emit(rec);
            ++count;
            if (!fo.ok) {
                ++bad;
                std::cerr << "audit failed: " << rec.line() << "\n";
            }
        }
        for (auto& c : fams.data().resultants) {
            ResOutcome ro = fams.verify_resultant(c);
            Record rec{c.id, c.p, c.n, "curve", ro.ok ? "match" : "no-match",
                       ro.ok ? "w" + std::to_string(ro.omega) : "-", ro.elapsed_us};
            emit(rec);
            ++count;
            if (!ro.ok) {
                ++bad;
                std::cerr << "audit failed: " << rec.line() << "\n";
            }
        }
    }
    if (opt.format == "text")
        std::cout << "summary: " << count << " records, " << bad << " failures, " << skipped
                  << " skipped over cost cap\n";
    return bad ? 1 : 0;
}

int run_check(const Options& opt, const std::string& poly_text, const std::string& frac_text,
              const std::string& field_spec, bool mu) {
    if (poly_text.empty() == frac_text.empty())
        throw ParseError("give exactly one of --poly and --frac");
    auto [p, n] = parse_field_spec(field_spec);
    const Field* F = nullptr;
    std::vector<u64> domain;
    std::string domain_name;
    if (mu) {
        u64 q = 1;
        for (u32 i = 0; i < n; ++i) q *= p;
        F = &Field::make(p, 2 * n);
        MuSubgroup sub(*F, q + 1);
        domain = sub.sorted();
        domain_name = "mu_" + std::to_string(q + 1);
    } else {
        F = &Field::make(p, n);
        domain.resize(F->size());
        for (u64 i = 0; i < F->size(); ++i) domain[i] = i;
        domain_name = "field";
    }
    i64 t0 = detail::now_us();
    RationalMap g = frac_text.empty() ? RationalMap(parse_poly(*F, poly_text))
                                      : parse_fraction(*F, frac_text);
    PermReport r = permutes_set(g, domain);
    Record rec{"check", p, n, domain_name, r.permutes ? "permutes" : "not-permutes",
               r.witness.str(), detail::now_us() - t0};
    emit(rec);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"catalog verifier for fraction and polynomial permutation families"};
    app.require_subcommand(1);

    Options opt;
    opt.data_path = std::string(FRACPERM_DATA_DIR) + "/families.dat";
    app.add_option("--data", opt.data_path, "catalog data file");
    app.add_option("--format", opt.format, "output style")
        ->check(CLI::IsMember({"text", "records"}));
    app.add_option("--workers", opt.workers, "threads for brute permutation checks");

    auto* v = app.add_subcommand("verify", "verify one family's claims");
    std::string family;
    std::vector<u64> sizes;
    std::vector<i64> params;
    v->add_option("family", family, "family id")->required();
    v->add_option("--k,--m,--n,--q", sizes, "size parameters, comma separated")->delimiter(',');
    v->add_option("--params", params, "parameter row, comma separated")->delimiter(',');

    auto* va = app.add_subcommand("verify-all", "verify every family and audit");
    u64 max_cost = u64(1) << 22;
    bool audits = true;
    va->add_option("--max-cost", max_cost, "largest field size to attempt");
    va->add_flag("--audits,!--no-audits", audits, "include curve audits");

    auto* ch = app.add_subcommand("check", "check one map over a field or subgroup");
    std::string poly_text, frac_text, field_spec;
    bool mu = false;
    ch->add_option("--poly", poly_text, "polynomial, e.g. \"x^2+w*x\"");
    ch->add_option("--frac", frac_text, "fraction, e.g. \"(x^3+1)/(x-1)\"");
    ch->add_option("--field", field_spec, "base field, e.g. 5^2")->required();
    ch->add_flag("--mu", mu, "check on the norm-one subgroup of the quadratic extension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*v) return run_verify(opt, family, sizes, params);
        if (*va) return run_verify_all(opt, max_cost, audits);
        return run_check(opt, poly_text, frac_text, field_spec, mu);
    } catch (const CapError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "artin/artin.hpp"
#include "io.hpp"
#include "selftest.hpp"

namespace {

using artin::io::json;

struct Options {
    int m = 3;
    std::string word, word2;
    bool all = false;
    bool brute = false;
    int radius = -1;
    int max_radius = 6;
    int max_n = 10;
    int cap = artin::kDefaultGrowthCap;
    bool classes = false;
    bool report = false;
    std::string family = "q";
    int k = 1;
    std::optional<int> j;
    int n = 20;
    double tol = 1e-12;
    std::string emit = "dot";
    std::string language = "conjgeo";
    int max_len = 6;
    int fftp_cap = artin::kDefaultFftpCap;
    std::string selftest_m = "3,4,5,6";
};

void print(const json& j) { std::cout << j.dump() << '\n'; }

artin::GroupParams params(const Options& o) { return artin::GroupParams::make(o.m); }

artin::Word word(const std::string& text, const Options& o) { return artin::parse_word(text, params(o)); }

void add_m(CLI::App* app, Options& o) {
    app->add_option("--m", o.m, "dihedral parameter m >= 3")->check(CLI::Range(3, 1 << 20))->default_val(3);
}

artin::Dfa language_dfa(const Options& o) {
    const auto g = params(o);
    if (o.language == "geo") return artin::build_geodesic_dfa(g);
    return artin::build_conjgeo_dfa(g);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dihedral Artin groups over the free product generators {x, y}"};
    app.require_subcommand(1);
    Options o;

    auto* normalize = app.add_subcommand("normalize", "canonical form of a word as JSON");
    add_m(normalize, o);
    normalize->add_option("word", o.word)->required();

    auto* geodesic = app.add_subcommand("geodesic", "geodesic length and representatives");
    add_m(geodesic, o);
    geodesic->add_option("word", o.word)->required();
    geodesic->add_flag("--all", o.all, "list every geodesic for the element");

    auto* classify = app.add_subcommand("classify", "geodesic type of a geodesic word");
    add_m(classify, o);
    classify->add_option("word", o.word)->required();

    auto* conj = app.add_subcommand("conj", "conjugacy keys, tests and permutation conjugators");
    conj->require_subcommand(1);
    auto* conj_key = conj->add_subcommand("key", "class representative");
    add_m(conj_key, o);
    conj_key->add_option("word", o.word)->required();
    auto* conj_test = conj->add_subcommand("test", "decide conjugacy");
    add_m(conj_test, o);
    conj_test->add_option("u", o.word)->required();
    conj_test->add_option("v", o.word2)->required();
    conj_test->add_flag("--brute", o.brute, "also run the bounded conjugator search");
    conj_test->add_option("--radius", o.radius, "conjugator radius for --brute");
    auto* conj_pcl = conj->add_subcommand("pcl", "least permutation conjugator");
    add_m(conj_pcl, o);
    conj_pcl->add_option("u", o.word)->required();
    conj_pcl->add_option("v", o.word2)->required();
    conj_pcl->add_option("--max-radius", o.max_radius)->check(CLI::NonNegativeNumber);

    auto* pcl = app.add_subcommand("pcl", "least permutation conjugator (same as conj pcl)");
    add_m(pcl, o);
    pcl->add_option("u", o.word)->required();
    pcl->add_option("v", o.word2)->required();
    pcl->add_option("--max-radius", o.max_radius)->check(CLI::NonNegativeNumber);

    auto* growth = app.add_subcommand("growth", "sphere sizes or conjugacy class counts as CSV");
    add_m(growth, o);
    growth->add_option("--max-n", o.max_n)->required()->check(CLI::NonNegativeNumber);
    growth->add_option("--cap", o.cap, "largest allowed --max-n")->check(CLI::PositiveNumber);
    growth->add_flag("--classes", o.classes, "count conjugacy classes instead of elements");
    growth->add_flag("--report", o.report, "asymptotics report as JSON");

    auto* series = app.add_subcommand("series", "Taylor coefficients of 1/den as CSV");
    series->add_option("--family", o.family)->required();
    series->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
    series->add_option("--j", o.j);
    series->add_option("--n", o.n)->check(CLI::NonNegativeNumber);

    auto* root = app.add_subcommand("root", "smallest positive root of a denominator as JSON");
    root->add_option("--family", o.family)->required();
    root->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
    root->add_option("--j", o.j);
    root->add_option("--tol", o.tol)->check(CLI::PositiveNumber);

    auto* automaton = app.add_subcommand("automaton", "conjugacy geodesic automaton");
    add_m(automaton, o);
    automaton->add_option("--emit", o.emit)->check(CLI::IsMember({"dot", "json"}));
    automaton->add_option("--language", o.language)->check(CLI::IsMember({"conjgeo", "geo"}));
    auto* count = automaton->add_subcommand("count", "accepted words of each length up to n, as CSV");
    add_m(count, o);
    count->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
    count->add_option("--language", o.language)->check(CLI::IsMember({"conjgeo", "geo"}));

    auto* fftp = app.add_subcommand("fftp", "fellow traveller check over all words up to a length");
    add_m(fftp, o);
    fftp->add_option("--max-len", o.max_len)->required()->check(CLI::NonNegativeNumber);
    fftp->add_option("--cap", o.fftp_cap)->check(CLI::PositiveNumber);

    auto* selftest = app.add_subcommand("selftest", "oracle equivalence checks at reduced caps");
    selftest->add_option("--m", o.selftest_m, "comma separated values of m");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << artin::io::error_json("UsageError", e.what()).dump() << '\n';
        return 2;
    }

    try {
        if (*normalize) {
            print(artin::io::element_json(artin::to_canonical(word(o.word, o), params(o))));
        } else if (*geodesic) {
            const auto g = params(o);
            const artin::Word w = word(o.word, o);
            const artin::CanonicalElement e = artin::to_canonical(w, g);
            json j{{"word", artin::format_word(w)},
                   {"length", artin::geodesic_length(e, g)},
                   {"is_geodesic", artin::is_geodesic(w, g)},
                   {"geodesic", artin::format_word(artin::geodesic_word(e, g))},
                   {"lexmin", artin::format_word(artin::lexmin_geodesic(e, g))}};
            if (o.all) {
                json a = json::array();
                for (const auto& v : artin::enumerate_geodesics(e, g)) a.push_back(artin::format_word(v));
                j["all"] = a;
            }
            print(j);
        } else if (*classify) {
            print(artin::io::classification_json(artin::classify_geodesic(word(o.word, o), params(o))));
        } else if (*conj_key) {
            print(artin::io::conj_key_json(artin::conj_representative(word(o.word, o), params(o))));
        } else if (*conj_test) {
            const auto g = params(o);
            const artin::Word u = word(o.word, o), v = word(o.word2, o);
            json j{{"u", artin::format_word(u)}, {"v", artin::format_word(v)}, {"conjugate", artin::is_conjugate(u, v, g)}};
            if (o.brute) {
                const int r = o.radius >= 0 ? o.radius : artin::default_brute_radius(u, v, g);
                j["brute_radius"] = r;
                j["brute_conjugate"] = artin::brute_force_conjugate(u, v, g, r);
            }
            print(j);
        } else if (*conj_pcl || *pcl) {
            const auto g = params(o);
            print(artin::io::pcl_json(artin::pcl(word(o.word, o), word(o.word2, o), g, o.max_radius)));
        } else if (*growth) {
            const auto g = params(o);
            if (o.report) {
                print(artin::io::asymptotics_json(artin::asymptotics_report(g, o.max_n, o.cap)));
            } else if (o.classes) {
                artin::io::write_counts(std::cout, artin::conj_class_counts(g, o.max_n, o.cap).s);
            } else {
                artin::io::write_counts(std::cout, artin::sphere_sizes(g, o.max_n, o.cap).s);
            }
        } else if (*series) {
            const auto den = artin::denominator_polynomial(artin::parse_family(o.family), o.k, o.j);
            artin::io::write_counts(std::cout, artin::series_coeffs(den, artin::IntPolynomial::from({1}), o.n));
        } else if (*root) {
            const auto poly = artin::denominator_polynomial(artin::parse_family(o.family), o.k, o.j);
            json j = artin::io::root_json(artin::smallest_positive_root(poly, o.tol), poly);
            j["family"] = artin::family_name(artin::parse_family(o.family));
            j["k"] = o.k;
            if (o.j) j["j"] = *o.j;
            print(j);
        } else if (*count) {
            const artin::Dfa d = language_dfa(o);
            std::vector<artin::BigInt> c;
            for (int n = 0; n <= o.n; ++n) c.push_back(artin::dfa_count(d, n));
            artin::io::write_counts(std::cout, c);
        } else if (*automaton) {
            const artin::Dfa d = language_dfa(o);
            if (o.emit == "json") print(artin::io::dfa_json(d));
            else std::cout << artin::dfa_to_dot(d, o.language);
        } else if (*fftp) {
            print(artin::io::fftp_json(artin::fftp_check(params(o), o.max_len, o.fftp_cap)));
        } else if (*selftest) {
            return artin::cli::run_selftest(o.selftest_m, std::cout) ? 0 : 1;
        }
    } catch (const artin::Error& e) {
        std::cerr << artin::io::error_json(e.kind(), e.what()).dump() << '\n';
        return 1;
    }
    return 0;
}

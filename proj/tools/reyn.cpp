#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reyn/enumerate.hpp"
#include "reyn/forest.hpp"
#include "reyn/identities.hpp"
#include "reyn/models.hpp"

namespace {

constexpr int kDefaultMaxSizeCap = 12;

int max_size_cap() {
    const char* env = std::getenv("REYN_MAX_SIZE");
    if (env == nullptr || *env == '\0') return kDefaultMaxSizeCap;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 0)
        throw CLI::ValidationError("REYN_MAX_SIZE", "REYN_MAX_SIZE must be a nonnegative integer");
    return static_cast<int>(v);
}

std::vector<reyn::Letter> parse_alphabet(const std::string& csv) {
    std::vector<reyn::Letter> letters;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string name =
            csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        letters.emplace_back(name);
        for (std::size_t i = 0; i + 1 < letters.size(); ++i)
            if (letters[i].name == name)
                throw std::invalid_argument("duplicate letter \"" + name + "\"");
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return letters;
}

std::map<std::string, reyn::Polynomial> parse_assignment(const std::string& csv) {
    std::map<std::string, reyn::Polynomial> assignment;
    std::size_t start = 0;
    while (start < csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string item =
            csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("assignment item \"" + item + "\" is not name=polynomial");
        reyn::Letter letter(item.substr(0, eq));
        assignment[letter.name] = reyn::parse_polynomial(item.substr(eq + 1));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return assignment;
}

struct Options {
    std::string word_text;
    std::string expr_text;
    std::string lhs_text, rhs_text;
    bool json = false;

    std::string identity;
    std::vector<std::string> args;
    int series_k = 0;

    std::string alphabet;
    int max_size = 0;
    bool reynolds_only = false;
    bool count_only = false;

    std::string model_name;
    std::string assign_text;
};

int run_parse(const Options& opt) {
    reyn::BracketedWord w = reyn::parse_word(opt.word_text);
    std::cout << "word: " << w.text() << "\n";
    std::cout << "depth: " << w.depth() << "\n";
    std::cout << "class: " << reyn::to_string(reyn::classify(w)) << "\n";
    return 0;
}

int run_apply_p(const Options& opt) {
    reyn::LinComb a = reyn::parse_lincomb(opt.expr_text);
    reyn::LinComb result = reyn::apply_p(a);
    std::cout << (opt.json ? reyn::to_json(result) : reyn::to_text(result)) << "\n";
    return 0;
}

int run_multiply(const Options& opt) {
    reyn::LinComb a = reyn::parse_lincomb(opt.lhs_text);
    reyn::LinComb b = reyn::parse_lincomb(opt.rhs_text);
    std::cout << reyn::to_text(reyn::multiply(a, b)) << "\n";
    return 0;
}

int run_check(const Options& opt) {
    std::vector<reyn::LinComb> args;
    args.reserve(opt.args.size());
    for (const std::string& s : opt.args) args.push_back(reyn::parse_lincomb(s));

    reyn::LinComb residual;
    if (opt.identity == "reynolds") {
        if (args.size() != 2) throw CLI::ValidationError("--args", "reynolds takes two arguments");
        residual = reyn::reynolds_residual(args[0], args[1]);
    } else if (opt.identity == "multivariant") {
        if (args.size() < 2)
            throw CLI::ValidationError("--args", "multivariant takes at least two arguments");
        residual = reyn::multivariant_residual(args);
    } else if (opt.identity == "series") {
        if (args.size() != 2) throw CLI::ValidationError("--args", "series takes two arguments");
        residual = reyn::truncated_series_residual(args[0], args[1], opt.series_k);
    } else {
        if (args.size() != 2) throw CLI::ValidationError("--args", "star takes two arguments");
        reyn::PCache cache;
        reyn::LinComb star = reyn::star_product_free(args[0], args[1], cache);
        residual = reyn::apply_p(star, cache) -
                   reyn::multiply(reyn::apply_p(args[0], cache), reyn::apply_p(args[1], cache));
    }
    std::cout << reyn::to_text(residual) << "\n";
    return residual.is_zero() ? 0 : 1;
}

int run_enum(const Options& opt) {
    int cap = max_size_cap();
    if (opt.max_size > cap)
        throw CLI::ValidationError(
            "--max-size", "exceeds the cap " + std::to_string(cap) + " (set REYN_MAX_SIZE to raise)");
    std::vector<reyn::Letter> letters = parse_alphabet(opt.alphabet);
    if (opt.count_only && !opt.reynolds_only) {
        auto counts = reyn::word_counts(letters.size(), opt.max_size);
        for (int n = 0; n <= opt.max_size; ++n) std::cout << n << "\t" << counts[n] << "\n";
        return 0;
    }
    std::vector<reyn::BracketedWord> words =
        opt.reynolds_only ? reyn::enumerate_reynolds_words(letters, opt.max_size)
                          : reyn::enumerate_words(letters, opt.max_size);
    if (opt.count_only) {
        std::vector<std::uint64_t> counts(opt.max_size + 1, 0);
        for (const reyn::BracketedWord& w : words) ++counts[w.size()];
        for (int n = 0; n <= opt.max_size; ++n) std::cout << n << "\t" << counts[n] << "\n";
        return 0;
    }
    for (const reyn::BracketedWord& w : words) std::cout << w.text() << "\n";
    return 0;
}

int run_eval(const Options& opt) {
    reyn::ReynoldsAlgebraModel<reyn::Polynomial> model =
        opt.model_name == "averaging" ? reyn::averaging_model() : reyn::differential_model();
    auto assignment = parse_assignment(opt.assign_text);
    reyn::LinComb a = reyn::parse_lincomb(opt.expr_text);
    reyn::Polynomial result = reyn::universal_map(model, assignment, a);
    std::cout << result.text() << "\n";
    return 0;
}

int run_dot(const Options& opt) {
    reyn::BracketedWord w = reyn::parse_word(opt.word_text);
    std::cout << reyn::to_dot(reyn::word_to_forest(w));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Free Reynolds algebra calculator"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* parse = app.add_subcommand("parse", "Parse a word and report its classification");
    parse->add_option("word", opt.word_text, "bracketed word")->required();

    CLI::App* apply = app.add_subcommand("apply-p", "Apply the Reynolds operator P");
    apply->add_option("expr", opt.expr_text, "linear combination of Reynolds words")->required();
    apply->add_flag("--json", opt.json, "emit JSON instead of text");

    CLI::App* mul = app.add_subcommand("multiply", "Multiply two linear combinations");
    mul->add_option("lhs", opt.lhs_text)->required();
    mul->add_option("rhs", opt.rhs_text)->required();

    CLI::App* check = app.add_subcommand("check", "Evaluate an identity residual");
    check->add_option("--identity", opt.identity, "which identity")
        ->required()
        ->check(CLI::IsMember({"reynolds", "multivariant", "series", "star"}));
    // The arguments are taken from the unparsed remainder rather than a
    // vector option: CLI11 rewrites vector values shaped like [..] as list
    // literals, which would corrupt bracketed words.
    check->add_flag("--args", "linear combination arguments follow")->required();
    check->allow_extras();
    check->add_option("--k", opt.series_k, "truncation order for series")->check(CLI::NonNegativeNumber);

    CLI::App* enumerate = app.add_subcommand("enum", "Enumerate words by size");
    enumerate->add_option("--alphabet", opt.alphabet, "comma separated letters")->required();
    enumerate->add_option("--max-size", opt.max_size, "largest size to enumerate")
        ->required()
        ->check(CLI::NonNegativeNumber);
    enumerate->add_flag("--reynolds-only", opt.reynolds_only, "keep Reynolds words only");
    enumerate->add_flag("--count", opt.count_only, "print size<TAB>count lines instead of words");

    CLI::App* eval = app.add_subcommand("eval", "Evaluate under a polynomial model");
    eval->add_option("--model", opt.model_name, "model name")
        ->required()
        ->check(CLI::IsMember({"averaging", "differential"}));
    eval->add_option("--assign", opt.assign_text, "letter assignment, e.g. x=x,y=x^2")->required();
    eval->add_option("--expr", opt.expr_text, "linear combination to evaluate")->required();

    CLI::App* dot = app.add_subcommand("dot", "Render the decorated forest of a word as DOT");
    dot->add_option("word", opt.word_text, "bracketed word")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (parse->parsed()) return run_parse(opt);
        if (apply->parsed()) return run_apply_p(opt);
        if (mul->parsed()) return run_multiply(opt);
        if (check->parsed()) {
            opt.args = check->remaining();
            return run_check(opt);
        }
        if (enumerate->parsed()) return run_enum(opt);
        if (eval->parsed()) return run_eval(opt);
        if (dot->parsed()) return run_dot(opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

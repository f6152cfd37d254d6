#include "nsp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "nsp/matcher.hpp"
#include "nsp/miner.hpp"
#include "nsp/orders.hpp"
#include "nsp/text.hpp"
#include "nsp/verification.hpp"

namespace nsp::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

enum class OutputFormat { Text, Csv };

struct CommonOptions {
    OutputFormat format = OutputFormat::Text;
    DatabaseFormat dbFormat = DatabaseFormat::Native;
    unsigned threads = 0;
};

class Table {
public:
    explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& out, OutputFormat format) const
    {
        std::vector<std::size_t> widths;
        for (const auto& row : rows_) {
            widths.resize(std::max(widths.size(), row.size()), 0);
            for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
        }
        for (const auto& row : rows_) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (format == OutputFormat::Csv) {
                    if (c > 0) line += ',';
                    line += row[c];
                } else {
                    if (c > 0) line += "  ";
                    line += row[c];
                    if (c + 1 < row.size()) line.append(widths[c] - row[c].size(), ' ');
                }
            }
            out << line << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

void add_common(CLI::App& cmd, CommonOptions& common, bool database)
{
    const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::Text}, {"csv", OutputFormat::Csv}};
    cmd.add_option("--format", common.format, "Output format: text or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    if (database) {
        const std::map<std::string, DatabaseFormat> dbFormats{{"native", DatabaseFormat::Native},
                                                              {"spmf", DatabaseFormat::Spmf}};
        cmd.add_option("--db-format", common.dbFormat, "Database format: native or spmf")
            ->transform(CLI::CheckedTransformer(dbFormats, CLI::ignore_case));
    }
    cmd.add_option("--threads", common.threads, "Worker threads (0 = hardware concurrency)");
}

Theta theta_option(const std::string& text)
{
    auto t = parse_theta(text);
    if (!t) throw UsageError("unknown theta '" + text + "'; expected occurrence-embedding-inclusion, e.g. weak-strict-total");
    return *t;
}

std::vector<Theta> selected_thetas(const std::string& theta, bool all)
{
    if (all) return {Theta::all().begin(), Theta::all().end()};
    if (theta.empty()) throw UsageError("one of --theta or --all-thetas is required");
    return {theta_option(theta)};
}

SequenceDatabase read_db(const std::string& path, const CommonOptions& common, std::ostream& err)
{
    auto loaded = load_database(path, common.dbFormat);
    for (const auto& w : loaded.warnings) err << "warning: " << w << '\n';
    return std::move(loaded.db);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string angle(const Sequence& s, const Dictionary& dict) { return "<" + render_sequence(s, dict) + ">"; }

// ---------------------------------------------------------------- match

struct MatchArgs {
    std::string db, pattern, theta;
    bool allThetas = false, explain = false;
};

int cmd_match(const MatchArgs& a, const CommonOptions& common, std::ostream& out, std::ostream& err)
{
    auto db = read_db(a.db, common, err);
    const auto thetas = selected_thetas(a.theta, a.allThetas);
    const NegPattern p = parse_pattern(a.pattern, db.dictionary);
    std::vector<std::string> header{"sequence"};
    for (const Theta t : thetas) {
        header.push_back(to_string(t));
        if (a.explain) header.push_back(to_string(t) + ":embedding");
    }
    if (a.explain) header.push_back("embeddings");
    Table table(header);
    for (std::size_t i = 0; i < db.sequences.size(); ++i) {
        const Sequence& s = db.sequences[i];
        std::vector<std::string> row{std::to_string(i + 1)};
        MatchReport last;
        for (const Theta t : thetas) {
            last = contains(p, s, t);
            row.push_back(yes_no(last.contained));
            if (a.explain) {
                const auto& e = t.occurrence == Occurrence::Weak ? last.witness : last.violator;
                row.push_back(e ? render_embedding(*e) : "-");
            }
        }
        if (a.explain)
            row.push_back(std::to_string(last.totalPositiveEmbeddings) + (last.countSaturated ? "+" : ""));
        table.add(std::move(row));
    }
    table.print(out, common.format);
    return 0;
}

// -------------------------------------------------------------- support

struct SupportArgs {
    std::string db, theta;
    std::vector<std::string> patterns;
    bool allThetas = false;
};

int cmd_support(const SupportArgs& a, const CommonOptions& common, std::ostream& out, std::ostream& err)
{
    auto db = read_db(a.db, common, err);
    const auto thetas = selected_thetas(a.theta, a.allThetas);
    std::vector<NegPattern> patterns;
    for (const auto& text : a.patterns) patterns.push_back(parse_pattern(text, db.dictionary));
    std::vector<std::string> header{"pattern"};
    for (const Theta t : thetas) header.push_back(to_string(t));
    Table table(header);
    for (const auto& p : patterns) {
        std::vector<std::string> row{render_pattern(p, db.dictionary)};
        for (const Theta t : thetas) row.push_back(std::to_string(support(p, db, t, common.threads)));
        table.add(std::move(row));
    }
    table.print(out, common.format);
    return 0;
}

// --------------------------------------------------------------- report

int cmd_report(const SupportArgs& a, const CommonOptions& common, std::ostream& out, std::ostream& err)
{
    auto db = read_db(a.db, common, err);
    std::vector<NegPattern> patterns;
    for (const auto& text : a.patterns) patterns.push_back(parse_pattern(text, db.dictionary));
    const std::vector<std::pair<std::string, Theta>> tools{
        {"eNSP", Theta{Occurrence::Strong, EmbeddingKind::Strict, NonInclusion::Total}},
        {"PNSP", Theta{Occurrence::Weak, EmbeddingKind::Strict, NonInclusion::Partial}},
        {"NegPSpan/NegGSP", Theta{Occurrence::Weak, EmbeddingKind::Strict, NonInclusion::Total}},
    };
    std::vector<std::string> header{"pattern"};
    for (const Theta t : Theta::all()) header.push_back(to_string(t));
    for (const auto& [name, t] : tools) header.push_back(name);
    Table table(header);
    for (const auto& p : patterns) {
        const auto sup = support_all(p, db.sequences);
        std::vector<std::string> row{render_pattern(p, db.dictionary)};
        for (std::size_t s : sup) row.push_back(std::to_string(s));
        for (const auto& tool : tools) row.push_back(std::to_string(sup[tool.second.index()]));
        table.add(std::move(row));
    }
    table.print(out, common.format);
    if (common.format == OutputFormat::Text)
        for (const auto& [name, t] : tools) out << "# " << name << " = " << to_string(t) << '\n';
    return 0;
}

// ----------------------------------------------------------------- mine

struct MineArgs {
    std::string db, theta, engine = "pruned";
    std::size_t minsup = 0;
    PatternBounds bounds;
    std::vector<std::string> alphabet;
};

int cmd_mine(MineArgs a, const CommonOptions& common, std::ostream& out, std::ostream& err)
{
    auto db = read_db(a.db, common, err);
    const Theta t = theta_option(a.theta);
    for (const auto& token : a.alphabet) {
        auto item = db.dictionary.find(token);
        if (!item) throw UsageError("alphabet item '" + token + "' does not occur in the database");
        a.bounds.alphabet.push_back(*item);
    }
    const MiningResult r = a.engine == "bruteforce" ? mine_bruteforce(db, t, a.minsup, a.bounds)
                                                    : mine_pruned(db, t, a.minsup, a.bounds);
    Table table({"pattern", "support"});
    for (const auto& [p, s] : r.frequent) table.add({render_pattern(p, db.dictionary), std::to_string(s)});
    table.print(out, common.format);
    out << "# theta " << to_string(r.theta) << '\n'
        << "# minsup " << r.minsup << '\n'
        << "# engine " << a.engine << '\n'
        << "# frequent " << r.frequent.size() << '\n'
        << "# candidates " << r.stats.candidates << '\n'
        << "# support-calls " << r.stats.supportCalls << '\n'
        << "# pruned-subtrees " << r.stats.prunedSubtrees << '\n'
        << "# pruned-candidates " << r.stats.prunedCandidates << '\n'
        << "# strong-skipped " << r.stats.strongSkipped << '\n';
    return 0;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite;
    SpaceOptions space;
    LemmaOptions lemmas;
};

class CheckList {
public:
    CheckList(const Dictionary& dict) : dict_(dict), table_({"status", "check", "expected", "observed", "detail"}) {}

    void add(bool pass, const std::string& check, const std::string& expected, const std::string& observed,
             const std::string& detail)
    {
        if (!pass) ++failures_;
        table_.add({pass ? "PASS" : "FAIL", check, expected, observed, detail});
    }

    std::string describe(const Counterexample& c) const
    {
        std::string d = "p=" + render_pattern(c.p, dict_);
        if (c.pPrime) d += " p'=" + render_pattern(*c.pPrime, dict_);
        if (c.pThird) d += " p''=" + render_pattern(*c.pThird, dict_);
        if (c.s) d += " s=" + angle(*c.s, dict_);
        return d;
    }

    std::string detail(const Verdict& v) const
    {
        if (v.counterexample) return describe(*v.counterexample);
        return "checked " + std::to_string(v.checkedPairs);
    }

    int finish(std::ostream& out, OutputFormat format) const
    {
        table_.print(out, format);
        return failures_ == 0 ? 0 : 1;
    }

private:
    const Dictionary& dict_;
    Table table_;
    std::size_t failures_ = 0;
};

std::string holds_text(bool holds) { return holds ? "holds" : "refuted"; }

void space_summary(std::ostream& out, const std::string& name, const VerificationSpace& space)
{
    out << "# " << name << " space: " << space.patterns.size() << " patterns, " << space.sequences.size()
        << " sequences\n";
}

std::string class_text(const std::vector<std::vector<Theta>>& classes)
{
    std::string s;
    for (const auto& cls : classes) {
        if (!s.empty()) s += ' ';
        s += '{';
        for (std::size_t i = 0; i < cls.size(); ++i) {
            if (i > 0) s += ' ';
            s += to_string(cls[i]);
        }
        s += '}';
    }
    return s;
}

std::vector<std::vector<Theta>> known_classes()
{
    std::array<std::array<Verdict, 8>, 8> m;
    const auto& table = known_dominance();
    for (const Theta a : Theta::all())
        for (const Theta b : Theta::all()) m[a.index()][b.index()].holds = table.dominates(a, b);
    return equivalence_classes(m);
}

int verify_dominance(const VerifyArgs& a, const CommonOptions& common, std::ostream& out)
{
    VerificationSpace space = default_space(a.space);
    space_summary(out, "default", space);
    CheckList checks(space.dictionary);
    const ContainmentIndex index(space.patterns, space.sequences, common.threads);
    const auto matrix = dominance_matrix(index);
    const auto& table = known_dominance();
    for (const Theta t : Theta::all())
        for (const Theta u : Theta::all()) {
            if (t == u) continue;
            const bool expected = table.dominates(t, u);
            const Verdict& v = matrix[t.index()][u.index()];
            checks.add(v.holds == expected, to_string(t) + " >= " + to_string(u), holds_text(expected),
                       holds_text(v.holds), checks.detail(v));
        }
    for (const auto& w : dominance_witnesses(space.dictionary))
        for (const auto& [t, u] : w.refutes) {
            const bool ok = refutes_dominance(w.p, w.s, t, u);
            checks.add(ok, "witness " + w.label, "refutes " + to_string(t) + " >= " + to_string(u),
                       ok ? "refutes" : "does not refute",
                       checks.describe(Counterexample{w.p, std::nullopt, std::nullopt, w.s}));
        }
    return checks.finish(out, common.format);
}

int verify_equivalence(const VerifyArgs& a, const CommonOptions& common, std::ostream& out)
{
    VerificationSpace general = default_space(a.space);
    SpaceOptions singletonOptions = a.space;
    singletonOptions.singletonNegatives = true;
    VerificationSpace singleton = default_space(singletonOptions);
    space_summary(out, "default", general);
    space_summary(out, "singleton-negative", singleton);
    CheckList checks(general.dictionary);

    const auto expected = known_classes();
    const auto observed = equivalence_classes(ContainmentIndex(general.patterns, general.sequences, common.threads));
    checks.add(observed == expected, "classes on default space", std::to_string(expected.size()),
               std::to_string(observed.size()), class_text(observed));

    const auto single =
        equivalence_classes(ContainmentIndex(singleton.patterns, singleton.sequences, common.threads));
    checks.add(single.size() == 4, "classes on singleton-negative space", "4", std::to_string(single.size()),
               class_text(single));
    return checks.finish(out, common.format);
}

int verify_antimono(const VerifyArgs& a, const CommonOptions& common, std::ostream& out)
{
    VerificationSpace space = default_space(a.space);
    space_summary(out, "default", space);
    CheckList checks(space.dictionary);
    const ContainmentIndex index(space.patterns, space.sequences, common.threads);
    const auto matrix = anti_monotonicity_matrix(index, common.threads);
    for (std::size_t o = 0; o < kAllOrders.size(); ++o)
        for (const Theta t : Theta::all()) {
            const bool expected = known_antimonotonic(t, kAllOrders[o]);
            const Verdict& v = matrix[o][t.index()];
            checks.add(v.holds == expected, to_string(t) + " on " + std::string(to_string(kAllOrders[o])),
                       holds_text(expected), holds_text(v.holds), checks.detail(v));
        }
    for (const auto& w : antimonotonicity_witnesses(space.dictionary))
        for (const Theta t : w.refutes) {
            const bool ok = refutes_antimonotonicity(w.p, w.pPrime, w.s, t, w.order);
            checks.add(ok, "witness " + w.label, "refutes " + to_string(t), ok ? "refutes" : "does not refute",
                       checks.describe(Counterexample{w.p, w.pPrime, std::nullopt, w.s}));
        }
    return checks.finish(out, common.format);
}

int verify_lemmas_suite(const VerifyArgs& a, const CommonOptions& common, std::ostream& out)
{
    VerificationSpace space = default_space(a.space);
    space_summary(out, "default", space);
    out << "# random draws: " << a.lemmas.draws << '\n';
    CheckList checks(space.dictionary);

    const auto& table = known_dominance();
    bool preorder = true;
    for (const Theta t : Theta::all()) {
        preorder = preorder && table.at(t, t) == Dominance::Self;
        for (const Theta u : Theta::all())
            for (const Theta v : Theta::all())
                if (table.dominates(t, u) && table.dominates(u, v)) preorder = preorder && table.dominates(t, v);
    }
    checks.add(preorder, "known dominance is a preorder", "holds", holds_text(preorder), "table");
    const auto classes = known_classes();
    checks.add(classes.size() == 6, "known dominance classes", "6", std::to_string(classes.size()),
               class_text(classes));

    for (const auto& [name, v] : verify_lemmas(space, a.lemmas))
        checks.add(v.holds, name, "holds", holds_text(v.holds), checks.detail(v));
    return checks.finish(out, common.format);
}

int cmd_verify(const VerifyArgs& a, const CommonOptions& common, std::ostream& out)
{
    if (a.suite == "dominance") return verify_dominance(a, common, out);
    if (a.suite == "equivalence") return verify_equivalence(a, common, out);
    if (a.suite == "antimono") return verify_antimono(a, common, out);
    return verify_lemmas_suite(a, common, out);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Negative sequential patterns under eight containment semantics", "nsp"};
    app.require_subcommand(1);
    CommonOptions common;

    MatchArgs match;
    auto* matchCmd = app.add_subcommand("match", "Containment of a pattern in each sequence");
    matchCmd->add_option("--db", match.db, "Database file")->required();
    matchCmd->add_option("--pattern", match.pattern, "Pattern, e.g. \"<a !(b c) d>\"")->required();
    auto* matchTheta = matchCmd->add_option("--theta", match.theta, "Containment relation, e.g. weak-strict-total");
    matchCmd->add_flag("--all-thetas", match.allThetas, "All eight containment relations")->excludes(matchTheta);
    matchCmd->add_flag("--explain", match.explain, "Show witness or violating embeddings");
    add_common(*matchCmd, common, true);

    SupportArgs sup;
    auto* supportCmd = app.add_subcommand("support", "Support of patterns in a database");
    supportCmd->add_option("--db", sup.db, "Database file")->required();
    supportCmd->add_option("--pattern", sup.patterns, "Pattern (repeatable)")->required();
    auto* supTheta = supportCmd->add_option("--theta", sup.theta, "Containment relation");
    supportCmd->add_flag("--all-thetas", sup.allThetas, "All eight containment relations")->excludes(supTheta);
    add_common(*supportCmd, common, true);

    SupportArgs report;
    auto* reportCmd = app.add_subcommand("report", "Supports under every containment relation and literature tool");
    reportCmd->add_option("--db", report.db, "Database file")->required();
    reportCmd->add_option("--pattern", report.patterns, "Pattern (repeatable)")->required();
    add_common(*reportCmd, common, true);

    MineArgs mine;
    auto* mineCmd = app.add_subcommand("mine", "Frequent negative sequential patterns");
    mineCmd->add_option("--db", mine.db, "Database file")->required();
    mineCmd->add_option("--theta", mine.theta, "Containment relation")->required();
    mineCmd->add_option("--minsup", mine.minsup, "Minimum support")->required()->check(CLI::PositiveNumber);
    mineCmd->add_option("--engine", mine.engine, "pruned or bruteforce")
        ->check(CLI::IsMember({"pruned", "bruteforce"}));
    mineCmd->add_option("--max-positives", mine.bounds.maxPositives, "Positive itemsets per pattern")
        ->check(CLI::PositiveNumber);
    mineCmd->add_option("--max-itemset", mine.bounds.maxItemsetSize, "Items per positive itemset")
        ->check(CLI::PositiveNumber);
    mineCmd->add_option("--max-neg", mine.bounds.maxNegSize, "Items per negative itemset")
        ->check(CLI::PositiveNumber);
    mineCmd->add_option("--alphabet", mine.alphabet, "Items patterns may use (comma separated)")->delimiter(',');
    add_common(*mineCmd, common, true);

    VerifyArgs verify;
    auto* verifyCmd = app.add_subcommand("verify", "Check the known results on finite spaces");
    verifyCmd->add_option("--suite", verify.suite, "dominance, equivalence, antimono or lemmas")
        ->required()
        ->check(CLI::IsMember({"dominance", "equivalence", "antimono", "lemmas"}));
    verifyCmd->add_option("--seed", verify.space.seed, "Seed of the sampled part of the space");
    verifyCmd->add_option("--pattern-samples", verify.space.patternSamples, "Sampled patterns");
    verifyCmd->add_option("--sequence-samples", verify.space.sequenceSamples, "Sampled sequences");
    verifyCmd->add_option("--draws", verify.lemmas.draws, "Random draws for the lemmas suite");
    verifyCmd->add_option("--draw-seed", verify.lemmas.seed, "Seed of the random draws");
    add_common(*verifyCmd, common, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*matchCmd) return cmd_match(match, common, out, err);
        if (*supportCmd) return cmd_support(sup, common, out, err);
        if (*reportCmd) return cmd_report(report, common, out, err);
        if (*mineCmd) return cmd_mine(mine, common, out, err);
        return cmd_verify(verify, common, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace nsp::cli

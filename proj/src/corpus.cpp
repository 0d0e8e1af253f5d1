#include "lexnet/corpus.hpp"

#include <fstream>
#include <json.hpp>

#include "lexnet/text.hpp"

namespace lexnet {

using ordered_json = nlohmann::ordered_json;

Corpus::Corpus(std::vector<UserProfile> users, CorpusMetadata meta)
    : users_(std::move(users)), meta_(std::move(meta)) {
    for (std::size_t i = 0; i < users_.size(); ++i) {
        auto [it, inserted] = index_.emplace(users_[i].user_id, i);
        if (!inserted)
            throw ParseError("duplicate user_id '" + users_[i].user_id + "'");
    }
}

const UserProfile* Corpus::find(const std::string& user_id) const {
    auto it = index_.find(user_id);
    return it == index_.end() ? nullptr : &users_[it->second];
}

namespace {

[[noreturn]] void line_error(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> string_list(const ordered_json& rec, const char* field,
                                     std::size_t line_no) {
    std::vector<std::string> out;
    auto it = rec.find(field);
    if (it == rec.end()) return out;
    if (!it->is_array()) line_error(line_no, std::string("field '") + field + "' must be a list");
    for (const auto& v : *it) {
        if (!v.is_string())
            line_error(line_no, std::string("field '") + field + "' must contain strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

}  // namespace

Corpus load_profiles(const std::string& path, int max_entries, LoadStats* stats) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open profile file '" + path + "'");

    LoadStats local;
    std::vector<UserProfile> users;
    std::set<std::string> seen_ids;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;

        ordered_json rec;
        try {
            rec = ordered_json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            line_error(line_no, std::string("invalid record: ") + e.what());
        }
        if (!rec.is_object()) line_error(line_no, "record is not an object");

        UserProfile u;
        auto id_it = rec.find("id");
        if (id_it == rec.end() || !id_it->is_string() || id_it->get<std::string>().empty())
            line_error(line_no, "missing or empty 'id'");
        u.user_id = id_it->get<std::string>();
        if (!seen_ids.insert(u.user_id).second)
            line_error(line_no, "duplicate user_id '" + u.user_id + "'");

        u.entries = string_list(rec, "entries", line_no);
        if (max_entries >= 0 && u.entries.size() > static_cast<std::size_t>(max_entries)) {
            u.entries.erase(u.entries.begin(), u.entries.end() - max_entries);
            ++local.entries_truncated;
        }

        for (const auto& raw : string_list(rec, "interests", line_no)) {
            std::string folded = fold_case_utf8(std::string(trim(raw)));
            if (!folded.empty()) u.interests.insert(std::move(folded));
        }
        for (auto* field : {"followers", "following"}) {
            auto& dst = std::string(field) == "followers" ? u.followers : u.following;
            for (auto& id : string_list(rec, field, line_no)) {
                if (id == u.user_id) {
                    ++local.self_loops_dropped;
                    continue;
                }
                dst.insert(std::move(id));
            }
        }
        if (auto it = rec.find("birth_date"); it != rec.end() && !it->is_null()) {
            if (!it->is_string()) line_error(line_no, "'birth_date' must be a string");
            auto d = parse_date(it->get<std::string>());
            if (!d) line_error(line_no, "'birth_date' is not a valid YYYY-MM-DD date");
            u.birth_date = *d;
        }
        if (auto it = rec.find("location"); it != rec.end() && !it->is_null()) {
            if (!it->is_string()) line_error(line_no, "'location' must be a string");
            u.location = it->get<std::string>();
        }

        ++local.records;
        users.push_back(std::move(u));
    }

    if (stats) *stats = local;
    return Corpus(std::move(users));
}

void save_profiles(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write profile file '" + path + "'");
    for (const UserProfile& u : corpus.users()) {
        ordered_json rec;
        rec["id"] = u.user_id;
        rec["entries"] = u.entries;
        rec["interests"] = u.interests;
        rec["followers"] = u.followers;
        rec["following"] = u.following;
        if (u.birth_date) rec["birth_date"] = u.birth_date->to_string();
        if (u.location) rec["location"] = *u.location;
        out << rec.dump() << '\n';
    }
}

DrugLexicon load_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open lexicon file '" + path + "'");
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid lexicon file: ") + e.what());
    }

    DrugLexicon lex;
    std::map<std::string, double> term_weight;

    for (const auto& t : doc.value("terms", ordered_json::array())) {
        LexiconTerm term;
        term.surface = fold_case_utf8(std::string(trim(t.value("surface", std::string()))));
        if (term.surface.empty()) throw ParseError("lexicon term with empty surface form");
        std::string kind = t.value("kind", std::string("slang"));
        if (kind == "official")
            term.kind = TermKind::official;
        else if (kind == "slang")
            term.kind = TermKind::slang;
        else
            throw ParseError("lexicon term '" + term.surface + "': unknown kind '" + kind + "'");
        double fallback =
            term.kind == TermKind::official ? kOfficialDefaultWeight : kSlangDefaultWeight;
        term.weight = t.value("weight", fallback);
        if (!(term.weight > 0))
            throw ParseError("lexicon term '" + term.surface + "': weight must be positive");
        term_weight[term.surface] = term.weight;
        lex.terms.push_back(std::move(term));
    }

    for (const auto& p : doc.value("phrases", ordered_json::array())) {
        LexiconPhrase phrase;
        std::set<std::string> words;
        for (const auto& w : p.value("words", ordered_json::array())) {
            std::string folded = fold_case_utf8(std::string(trim(w.get<std::string>())));
            if (folded.empty()) throw ParseError("lexicon phrase with empty word");
            words.insert(std::move(folded));
        }
        if (words.size() < 2)
            throw ParseError("lexicon phrase needs at least 2 distinct words");
        phrase.words.assign(words.begin(), words.end());

        double component_sum = 0;
        for (const auto& w : phrase.words) {
            auto it = term_weight.find(w);
            if (it != term_weight.end()) component_sum += it->second;
        }
        phrase.weight = p.value("weight", component_sum + 1.0);
        if (!(phrase.weight > 0)) throw ParseError("lexicon phrase weight must be positive");
        if (!(phrase.weight > component_sum))
            throw ParseError("lexicon phrase weight must exceed the sum of its component terms");
        lex.phrases.push_back(std::move(phrase));
    }
    return lex;
}

ValidationReport validate_corpus(const Corpus& corpus) {
    ValidationReport rep;
    rep.users = corpus.size();
    std::set<std::string> dangling;
    for (const UserProfile& u : corpus.users()) {
        if (!u.interests.empty()) ++rep.with_interests;
        if (u.birth_date) {
            int age = years_between(*u.birth_date, corpus.metadata().crawl_date);
            if (age >= 0 && age <= 80) ++rep.with_valid_age;
        }
        for (const auto* side : {&u.followers, &u.following})
            for (const std::string& id : *side)
                if (!corpus.contains(id)) dangling.insert(id);
    }
    rep.dangling_ids = dangling.size();
    return rep;
}

}  // namespace lexnet

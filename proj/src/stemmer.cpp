#include "lexnet/stemmer.hpp"

#include <array>
#include <string>

#include "lexnet/text.hpp"

// Russian stemmer of the Porter/Snowball family. Suffix classes and the
// four-step schedule follow the published algorithm: all removals are
// confined to RV (the region after the first vowel); the derivational
// endings must additionally lie in R2. Suffix matching picks the longest
// candidate of a class; when that candidate carries the "preceded by а/я"
// precondition and the precondition fails, the whole class fails (no
// fallback to shorter candidates).
//
// The four-step pass is applied until the word stops changing. A single
// pass is not idempotent (a stripped verb stem may itself end in a noun
// ending), and stem() promises a fixed point.

namespace lexnet {

namespace {

using U32 = std::u32string;

constexpr char32_t kA = U'а', kYa = U'я', kI = U'и', kN = U'н', kSoft = U'ь', kYo = U'ё',
                   kYe = U'е';

bool is_vowel(char32_t c) {
    switch (c) {
        case U'а':
        case U'е':
        case U'и':
        case U'о':
        case U'у':
        case U'ы':
        case U'э':
        case U'ю':
        case U'я':
            return true;
        default:
            return false;
    }
}

struct Ending {
    std::u32string_view text;
    bool after_a_ya;  // must be preceded by а or я (the а/я is kept)
};

constexpr std::array<Ending, 9> kPerfectiveGerund = {{
    {U"в", true},
    {U"вши", true},
    {U"вшись", true},
    {U"ив", false},
    {U"ивши", false},
    {U"ившись", false},
    {U"ыв", false},
    {U"ывши", false},
    {U"ывшись", false},
}};

constexpr std::array<Ending, 26> kAdjective = {{
    {U"ее", false}, {U"ие", false}, {U"ые", false}, {U"ое", false}, {U"ими", false},
    {U"ыми", false}, {U"ей", false}, {U"ий", false}, {U"ый", false}, {U"ой", false},
    {U"ем", false}, {U"им", false}, {U"ым", false}, {U"ом", false}, {U"его", false},
    {U"ого", false}, {U"ему", false}, {U"ому", false}, {U"их", false}, {U"ых", false},
    {U"ую", false}, {U"юю", false}, {U"ая", false}, {U"яя", false}, {U"ою", false},
    {U"ею", false},
}};

constexpr std::array<Ending, 8> kParticiple = {{
    {U"ем", true},
    {U"нн", true},
    {U"вш", true},
    {U"ющ", true},
    {U"щ", true},
    {U"ивш", false},
    {U"ывш", false},
    {U"ующ", false},
}};

constexpr std::array<Ending, 2> kReflexive = {{
    {U"ся", false},
    {U"сь", false},
}};

constexpr std::array<Ending, 46> kVerb = {{
    {U"ла", true},   {U"на", true},   {U"ете", true},  {U"йте", true},  {U"ли", true},
    {U"й", true},    {U"л", true},    {U"ем", true},   {U"н", true},    {U"ло", true},
    {U"но", true},   {U"ет", true},   {U"ют", true},   {U"ны", true},   {U"ть", true},
    {U"ешь", true},  {U"нно", true},  {U"ила", false}, {U"ыла", false}, {U"ена", false},
    {U"ейте", false}, {U"уйте", false}, {U"ите", false}, {U"или", false}, {U"ыли", false},
    {U"ей", false},  {U"уй", false},  {U"ил", false},  {U"ыл", false},  {U"им", false},
    {U"ым", false},  {U"ен", false},  {U"ило", false}, {U"ыло", false}, {U"ено", false},
    {U"ят", false},  {U"ует", false}, {U"уют", false}, {U"ит", false},  {U"ыт", false},
    {U"ены", false}, {U"ить", false}, {U"ыть", false}, {U"ишь", false}, {U"ую", false},
    {U"ю", false},
}};

constexpr std::array<Ending, 36> kNoun = {{
    {U"а", false},   {U"ев", false},  {U"ов", false},  {U"ие", false},  {U"ье", false},
    {U"е", false},   {U"иями", false}, {U"ями", false}, {U"ами", false}, {U"еи", false},
    {U"ии", false},  {U"и", false},   {U"ией", false}, {U"ей", false},  {U"ой", false},
    {U"ий", false},  {U"й", false},   {U"иям", false}, {U"ям", false},  {U"ием", false},
    {U"ем", false},  {U"ам", false},  {U"ом", false},  {U"о", false},   {U"у", false},
    {U"ах", false},  {U"иях", false}, {U"ях", false},  {U"ы", false},   {U"ь", false},
    {U"ию", false},  {U"ью", false},  {U"ю", false},   {U"ия", false},  {U"ья", false},
    {U"я", false},
}};

constexpr std::array<Ending, 2> kSuperlative = {{
    {U"ейш", false},
    {U"ейше", false},
}};

constexpr std::array<Ending, 2> kDerivational = {{
    {U"ост", false},
    {U"ость", false},
}};

struct Regions {
    size_t rv;
    size_t r2;
};

Regions mark_regions(const U32& w) {
    Regions reg{w.size(), w.size()};
    size_t first_vowel = w.size();
    for (size_t i = 0; i < w.size(); ++i) {
        if (is_vowel(w[i])) {
            first_vowel = i;
            break;
        }
    }
    if (first_vowel == w.size()) return reg;
    reg.rv = first_vowel + 1;

    size_t r1 = w.size();
    for (size_t i = 1; i < w.size(); ++i) {
        if (!is_vowel(w[i]) && is_vowel(w[i - 1])) {
            r1 = i + 1;
            break;
        }
    }
    for (size_t i = r1 + 1; i < w.size(); ++i) {
        if (!is_vowel(w[i]) && is_vowel(w[i - 1])) {
            reg.r2 = i + 1;
            break;
        }
    }
    return reg;
}

bool ends_with(const U32& w, std::u32string_view sfx, size_t region_start) {
    if (sfx.size() > w.size() || w.size() - sfx.size() < region_start) return false;
    return U32(w.end() - sfx.size(), w.end()) == sfx;
}

/// Longest-match removal over one suffix class. Returns true when a suffix
/// was removed; false when no suffix matched or the best match failed its
/// а/я precondition.
template <size_t N>
bool remove_class(U32& w, const std::array<Ending, N>& endings, size_t rv) {
    const Ending* best = nullptr;
    for (const Ending& e : endings) {
        if ((!best || e.text.size() > best->text.size()) && ends_with(w, e.text, rv)) best = &e;
    }
    if (!best) return false;
    if (best->after_a_ya) {
        size_t pos = w.size() - best->text.size();
        if (pos == 0 || pos - 1 < rv) return false;
        char32_t prev = w[pos - 1];
        if (prev != kA && prev != kYa) return false;
    }
    w.resize(w.size() - best->text.size());
    return true;
}

void step1(U32& w, size_t rv) {
    if (remove_class(w, kPerfectiveGerund, rv)) return;
    remove_class(w, kReflexive, rv);
    if (remove_class(w, kAdjective, rv)) {
        remove_class(w, kParticiple, rv);
        return;
    }
    if (remove_class(w, kVerb, rv)) return;
    remove_class(w, kNoun, rv);
}

void step4(U32& w, size_t rv) {
    if (w.size() >= 2 && w[w.size() - 1] == kN && w[w.size() - 2] == kN &&
        w.size() - 2 >= rv) {
        w.pop_back();
        return;
    }
    if (remove_class(w, kSuperlative, rv)) {
        if (w.size() >= 2 && w[w.size() - 1] == kN && w[w.size() - 2] == kN &&
            w.size() - 2 >= rv)
            w.pop_back();
        return;
    }
    if (!w.empty() && w.back() == kSoft && w.size() - 1 >= rv) w.pop_back();
}

}  // namespace

std::string stem(std::string_view token, StemmerMode mode) {
    if (mode == StemmerMode::identity) return std::string(token);

    U32 w;
    bool cyrillic = !token.empty();
    size_t i = 0;
    while (i < token.size()) {
        char32_t cp = fold_case(decode_utf8(token, i));
        if (cp == kYo) cp = kYe;
        if (cp < U'а' || cp > U'я') {
            cyrillic = false;
            break;
        }
        w.push_back(cp);
    }
    if (!cyrillic) return std::string(token);

    for (std::size_t before = w.size() + 1; w.size() < before;) {
        before = w.size();
        const Regions reg = mark_regions(w);
        step1(w, reg.rv);
        if (!w.empty() && w.back() == kI && w.size() - 1 >= reg.rv) w.pop_back();
        {
            // Derivational endings must lie entirely in R2.
            const Ending* best = nullptr;
            for (const Ending& e : kDerivational) {
                if ((!best || e.text.size() > best->text.size()) &&
                    ends_with(w, e.text, reg.rv))
                    best = &e;
            }
            if (best && w.size() - best->text.size() >= reg.r2)
                w.resize(w.size() - best->text.size());
        }
        step4(w, reg.rv);
    }

    std::string out;
    out.reserve(w.size() * 2);
    for (char32_t cp : w) append_utf8(out, cp);
    return out;
}

}  // namespace lexnet

#include "ilpsumm/stemmer.hpp"

#include <cstring>

namespace ilpsumm {

namespace {

// Working state for one stemming pass. `end` is the index of the last live
// character, `j` marks the stem/suffix split set by the most recent ends().
struct Stem {
    std::string w;
    int end;
    int j;

    explicit Stem(std::string word) : w(std::move(word)), end(static_cast<int>(w.size()) - 1), j(0) {}

    bool consonant(int i) const {
        char c = w[static_cast<std::size_t>(i)];
        switch (c) {
            case 'a': case 'e': case 'i': case 'o': case 'u':
                return false;
            case 'y':
                return i == 0 ? true : !consonant(i - 1);
            default:
                return true;
        }
    }

    // Number of VC sequences in w[0..j].
    int measure() const {
        int m = 0;
        int i = 0;
        while (true) {
            if (i > j) return m;
            if (!consonant(i)) break;
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > j) return m;
                if (consonant(i)) break;
                ++i;
            }
            ++i;
            ++m;
            while (true) {
                if (i > j) return m;
                if (!consonant(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j; ++i)
            if (!consonant(i)) return true;
        return false;
    }

    bool double_consonant(int i) const {
        if (i < 1) return false;
        if (w[static_cast<std::size_t>(i)] != w[static_cast<std::size_t>(i - 1)]) return false;
        return consonant(i);
    }

    // consonant-vowel-consonant ending at i, where the final consonant is
    // not w, x or y.
    bool cvc(int i) const {
        if (i < 2 || !consonant(i) || consonant(i - 1) || !consonant(i - 2)) return false;
        char c = w[static_cast<std::size_t>(i)];
        return c != 'w' && c != 'x' && c != 'y';
    }

    bool ends(const char* s) {
        int len = static_cast<int>(std::strlen(s));
        if (len > end + 1) return false;
        if (w.compare(static_cast<std::size_t>(end - len + 1), static_cast<std::size_t>(len), s) != 0) return false;
        j = end - len;
        return true;
    }

    // Replace the suffix after j with s.
    void set_to(const char* s) {
        int len = static_cast<int>(std::strlen(s));
        w.replace(static_cast<std::size_t>(j + 1), w.size() - static_cast<std::size_t>(j + 1), s);
        end = j + len;
    }

    void replace_if_stem(const char* s) {
        if (measure() > 0) set_to(s);
    }

    void step1a() {
        if (w[static_cast<std::size_t>(end)] != 's') return;
        if (ends("sses")) {
            end -= 2;
        } else if (ends("ies")) {
            set_to("i");
        } else if (w[static_cast<std::size_t>(end - 1)] != 's') {
            --end;
        }
    }

    void step1b() {
        if (ends("eed")) {
            if (measure() > 0) --end;
            return;
        }
        if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            end = j;
            if (ends("at")) {
                set_to("ate");
            } else if (ends("bl")) {
                set_to("ble");
            } else if (ends("iz")) {
                set_to("ize");
            } else if (double_consonant(end)) {
                --end;
                char c = w[static_cast<std::size_t>(end)];
                if (c == 'l' || c == 's' || c == 'z') ++end;
            } else if (measure() == 1 && cvc(end)) {
                set_to("e");
            }
        }
    }

    void step1c() {
        if (ends("y") && vowel_in_stem()) w[static_cast<std::size_t>(end)] = 'i';
    }

    void step2() {
        if (end < 1) return;
        switch (w[static_cast<std::size_t>(end - 1)]) {
            case 'a':
                if (ends("ational")) { replace_if_stem("ate"); break; }
                if (ends("tional")) { replace_if_stem("tion"); break; }
                break;
            case 'c':
                if (ends("enci")) { replace_if_stem("ence"); break; }
                if (ends("anci")) { replace_if_stem("ance"); break; }
                break;
            case 'e':
                if (ends("izer")) { replace_if_stem("ize"); break; }
                break;
            case 'l':
                if (ends("abli")) { replace_if_stem("able"); break; }
                if (ends("alli")) { replace_if_stem("al"); break; }
                if (ends("entli")) { replace_if_stem("ent"); break; }
                if (ends("eli")) { replace_if_stem("e"); break; }
                if (ends("ousli")) { replace_if_stem("ous"); break; }
                break;
            case 'o':
                if (ends("ization")) { replace_if_stem("ize"); break; }
                if (ends("ation")) { replace_if_stem("ate"); break; }
                if (ends("ator")) { replace_if_stem("ate"); break; }
                break;
            case 's':
                if (ends("alism")) { replace_if_stem("al"); break; }
                if (ends("iveness")) { replace_if_stem("ive"); break; }
                if (ends("fulness")) { replace_if_stem("ful"); break; }
                if (ends("ousness")) { replace_if_stem("ous"); break; }
                break;
            case 't':
                if (ends("aliti")) { replace_if_stem("al"); break; }
                if (ends("iviti")) { replace_if_stem("ive"); break; }
                if (ends("biliti")) { replace_if_stem("ble"); break; }
                break;
            default:
                break;
        }
    }

    void step3() {
        switch (w[static_cast<std::size_t>(end)]) {
            case 'e':
                if (ends("icate")) { replace_if_stem("ic"); break; }
                if (ends("ative")) { replace_if_stem(""); break; }
                if (ends("alize")) { replace_if_stem("al"); break; }
                break;
            case 'i':
                if (ends("iciti")) { replace_if_stem("ic"); break; }
                break;
            case 'l':
                if (ends("ical")) { replace_if_stem("ic"); break; }
                if (ends("ful")) { replace_if_stem(""); break; }
                break;
            case 's':
                if (ends("ness")) { replace_if_stem(""); break; }
                break;
            default:
                break;
        }
    }

    void step4() {
        if (end < 1) return;
        switch (w[static_cast<std::size_t>(end - 1)]) {
            case 'a':
                if (ends("al")) break;
                return;
            case 'c':
                if (ends("ance")) break;
                if (ends("ence")) break;
                return;
            case 'e':
                if (ends("er")) break;
                return;
            case 'i':
                if (ends("ic")) break;
                return;
            case 'l':
                if (ends("able")) break;
                if (ends("ible")) break;
                return;
            case 'n':
                if (ends("ant")) break;
                if (ends("ement")) break;
                if (ends("ment")) break;
                if (ends("ent")) break;
                return;
            case 'o':
                if (ends("ion") && j >= 0 &&
                    (w[static_cast<std::size_t>(j)] == 's' || w[static_cast<std::size_t>(j)] == 't'))
                    break;
                if (ends("ou")) break;
                return;
            case 's':
                if (ends("ism")) break;
                return;
            case 't':
                if (ends("ate")) break;
                if (ends("iti")) break;
                return;
            case 'u':
                if (ends("ous")) break;
                return;
            case 'v':
                if (ends("ive")) break;
                return;
            case 'z':
                if (ends("ize")) break;
                return;
            default:
                return;
        }
        if (measure() > 1) end = j;
    }

    void step5() {
        j = end;
        if (w[static_cast<std::size_t>(end)] == 'e') {
            int m = measure();
            if (m > 1 || (m == 1 && !cvc(end - 1))) --end;
        }
        if (w[static_cast<std::size_t>(end)] == 'l' && double_consonant(end) && measure() > 1) --end;
    }

    std::string result() {
        w.resize(static_cast<std::size_t>(end + 1));
        return std::move(w);
    }
};

}  // namespace

std::string porter_stem(std::string word) {
    if (word.size() <= 2) return word;
    for (char c : word)
        if (c < 'a' || c > 'z') return word;
    Stem s(std::move(word));
    s.step1a();
    s.step1b();
    s.step1c();
    s.step2();
    s.step3();
    s.step4();
    s.step5();
    return s.result();
}

}  // namespace ilpsumm

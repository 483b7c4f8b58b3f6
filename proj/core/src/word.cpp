#include "torelli/word.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include "torelli/error.hpp"

namespace torelli {

  namespace {
    void check_letter(Letter l, std::size_t rank) {
      if (l.index < 1 || static_cast<std::size_t>(l.index) > rank) {
        throw DomainError("generator index " + std::to_string(l.index)
                          + " out of range for rank " + std::to_string(rank));
      }
      if (l.sign != 1 && l.sign != -1) {
        throw DomainError("letter sign must be +1 or -1");
      }
    }

    void push_reduced(std::vector<Letter>& out, Letter l) {
      if (!out.empty() && out.back() == l.inverse()) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }

    void require_same_rank(Word const& u, Word const& v) {
      if (u.rank() != v.rank()) {
        throw DomainError("rank mismatch: " + std::to_string(u.rank())
                          + " vs " + std::to_string(v.rank()));
      }
    }
  }  // namespace

  Word Word::from_letters(std::size_t rank, std::span<Letter const> letters) {
    Word w(rank);
    w._letters.reserve(letters.size());
    for (Letter l : letters) {
      check_letter(l, rank);
      push_reduced(w._letters, l);
    }
    return w;
  }

  Word::Word(std::size_t rank, std::initializer_list<int> signed_letters)
      : _rank(rank) {
    for (int s : signed_letters) {
      Letter l{s < 0 ? -s : s, s < 0 ? -1 : 1};
      check_letter(l, rank);
      push_reduced(_letters, l);
    }
  }

  Word Word::generator(std::size_t rank, int index, int sign) {
    Letter l{index, sign};
    return from_letters(rank, std::span<Letter const>(&l, 1));
  }

  Word Word::lift(std::size_t new_rank) const {
    if (new_rank < static_cast<std::size_t>(max_index())) {
      throw DomainError("cannot view word in a smaller free group");
    }
    Word w(new_rank);
    w._letters = _letters;
    return w;
  }

  int Word::max_index() const noexcept {
    int m = 0;
    for (Letter l : _letters) {
      m = std::max(m, l.index);
    }
    return m;
  }

  Word reduce(std::span<Letter const> letters, std::size_t rank) {
    return Word::from_letters(rank, letters);
  }

  Word mul(Word const& u, Word const& v) {
    require_same_rank(u, v);
    std::vector<Letter> out = u.letters();
    for (Letter l : v.letters()) {
      push_reduced(out, l);
    }
    return Word::from_letters(u.rank(), out);
  }

  Word inv(Word const& u) {
    std::vector<Letter> out;
    out.reserve(u.length());
    for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return Word::from_letters(u.rank(), out);
  }

  Word conj(Word const& g, Word const& w) {
    return mul(mul(g, w), inv(g));
  }

  Word comm(Word const& u, Word const& v) {
    return mul(mul(u, v), mul(inv(u), inv(v)));
  }

  Word power(Word const& u, long exponent) {
    Word base = exponent < 0 ? inv(u) : u;
    Word out(u.rank());
    for (long i = 0; i < std::abs(exponent); ++i) {
      out = mul(out, base);
    }
    return out;
  }

  Word parse_word(std::string_view text, std::size_t rank) {
    std::vector<Letter> letters;
    std::istringstream  in{std::string(text)};
    std::string         tok;
    std::size_t         pos = 0;
    bool                saw_identity = false;
    for (; in >> tok; ++pos) {
      if (tok == "e") {
        saw_identity = true;
        continue;
      }
      std::string_view t = tok;
      int              sign = 1;
      if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
        sign = -1;
        t.remove_suffix(3);
      }
      if (t.size() < 2 || t[0] != 'x') {
        throw ParseError("expected x<k> or x<k>^-1, got '" + tok + "'", pos);
      }
      int  k = 0;
      auto [p, ec] = std::from_chars(t.data() + 1, t.data() + t.size(), k);
      if (ec != std::errc{} || p != t.data() + t.size() || k < 1) {
        throw ParseError("bad generator index in '" + tok + "'", pos);
      }
      if (static_cast<std::size_t>(k) > rank) {
        throw ParseError("generator x" + std::to_string(k)
                             + " exceeds rank " + std::to_string(rank),
                         pos);
      }
      letters.push_back({k, sign});
    }
    if (saw_identity && !letters.empty()) {
      throw ParseError("'e' must be the only token", 0);
    }
    return Word::from_letters(rank, letters);
  }

  std::string to_string(Word const& w) {
    if (w.empty()) {
      return "e";
    }
    std::string out;
    for (Letter l : w.letters()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += 'x';
      out += std::to_string(l.index);
      if (l.sign < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << to_string(w);
  }

  IntVector abelianization_vector(Word const& w) {
    std::vector<long> counts(w.rank(), 0);
    for (Letter l : w.letters()) {
      counts[static_cast<std::size_t>(l.index - 1)] += l.sign;
    }
    return IntVector(counts.begin(), counts.end());
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupMap
  ////////////////////////////////////////////////////////////////////////

  GroupMap::GroupMap(unchecked_t,
                     std::vector<Word>                images,
                     std::optional<std::vector<Word>> inverse_images)
      : _images(std::move(images)), _inverse(std::move(inverse_images)) {}

  GroupMap::GroupMap(std::vector<Word>                images,
                     std::optional<std::vector<Word>> inverse_images)
      : _images(std::move(images)), _inverse(std::move(inverse_images)) {
    std::size_t const m = _images.size();
    for (auto const& w : _images) {
      if (w.rank() != m) {
        throw DomainError("generator image has rank " + std::to_string(w.rank())
                          + ", expected " + std::to_string(m));
      }
    }
    if (_inverse) {
      if (_inverse->size() != m) {
        throw DomainError("inverse certificate has the wrong length");
      }
      for (auto const& w : *_inverse) {
        if (w.rank() != m) {
          throw DomainError("inverse certificate image has the wrong rank");
        }
      }
      GroupMap f(unchecked_t{}, _images, std::nullopt);
      GroupMap g(unchecked_t{}, *_inverse, std::nullopt);
      for (std::size_t i = 0; i < m; ++i) {
        Word x = Word::generator(m, static_cast<int>(i + 1));
        if (apply(f, apply(g, x)) != x || apply(g, apply(f, x)) != x) {
          throw DomainError("inverse certificate fails on x"
                            + std::to_string(i + 1));
        }
      }
    }
  }

  GroupMap GroupMap::identity(std::size_t rank) {
    std::vector<Word> gens;
    for (std::size_t i = 1; i <= rank; ++i) {
      gens.push_back(Word::generator(rank, static_cast<int>(i)));
    }
    return GroupMap(unchecked_t{}, gens, gens);
  }

  std::vector<Word> const& GroupMap::inverse_images() const {
    if (!_inverse) {
      throw DomainError("map carries no inverse certificate");
    }
    return *_inverse;
  }

  GroupMap GroupMap::inverse() const {
    return GroupMap(unchecked_t{}, inverse_images(), _images);
  }

  bool GroupMap::is_identity() const {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      auto const& w = _images[i];
      if (w.length() != 1 || w[0] != Letter{static_cast<int>(i + 1), 1}) {
        return false;
      }
    }
    return true;
  }

  Word apply(GroupMap const& f, Word const& w) {
    if (f.rank() != w.rank()) {
      throw DomainError("rank mismatch: map of rank " + std::to_string(f.rank())
                        + " applied to word of rank "
                        + std::to_string(w.rank()));
    }
    std::vector<Letter> out;
    for (Letter l : w.letters()) {
      auto const& img = f.image(l.index).letters();
      if (l.sign > 0) {
        for (Letter a : img) {
          push_reduced(out, a);
        }
      } else {
        for (auto it = img.rbegin(); it != img.rend(); ++it) {
          push_reduced(out, it->inverse());
        }
      }
    }
    return Word::from_letters(w.rank(), out);
  }

  GroupMap compose(GroupMap const& f, GroupMap const& g) {
    if (f.rank() != g.rank()) {
      throw DomainError("rank mismatch in compose");
    }
    std::vector<Word> images;
    images.reserve(g.rank());
    for (auto const& w : g.images()) {
      images.push_back(apply(f, w));
    }
    std::optional<std::vector<Word>> inverse;
    if (f.has_inverse() && g.has_inverse()) {
      GroupMap gi(GroupMap::unchecked_t{}, g.inverse_images(), std::nullopt);
      inverse.emplace();
      for (auto const& w : f.inverse_images()) {
        inverse->push_back(apply(gi, w));
      }
    }
    return GroupMap(GroupMap::unchecked_t{}, std::move(images),
                    std::move(inverse));
  }

  GroupMap inner_automorphism(Word const& g) {
    std::size_t const m = g.rank();
    std::vector<Word> images, inverse;
    Word              gi = inv(g);
    for (std::size_t i = 1; i <= m; ++i) {
      Word x = Word::generator(m, static_cast<int>(i));
      images.push_back(conj(g, x));
      inverse.push_back(conj(gi, x));
    }
    return GroupMap(std::move(images), std::move(inverse));
  }

  std::optional<Word> inner_conjugator(GroupMap const& f) {
    std::size_t const m = f.rank();
    if (m == 0) {
      return Word(0);
    }
    if (f.is_identity()) {
      return Word(m);
    }
    if (m == 1) {
      // F_1 is abelian: the only inner automorphism is the identity.
      return std::nullopt;
    }
    // f(x1) = u x1 u^-1 with the shortest such u; then g = u x1^k.
    auto const& w = f.image(1).letters();
    std::size_t const len = w.size();
    if (len % 2 == 0) {
      return std::nullopt;
    }
    std::size_t const h = len / 2;
    if (w[h] != Letter{1, 1}) {
      return std::nullopt;
    }
    for (std::size_t i = 0; i < h; ++i) {
      if (w[len - 1 - i] != w[i].inverse()) {
        return std::nullopt;
      }
    }
    Word u = Word::from_letters(m, std::span<Letter const>(w.data(), h));
    // u^-1 f(x2) u must be x1^k x2 x1^-k.
    Word              t = mul(mul(inv(u), f.image(2)), u);
    long              k = 0;
    auto const&       tl = t.letters();
    if (!tl.empty() && tl[0].index == 1) {
      int s = tl[0].sign;
      while (static_cast<std::size_t>(k) < tl.size() && tl[k] == Letter{1, s}) {
        ++k;
      }
      k *= s;
    }
    Word g = mul(u, power(Word::generator(m, 1), k));
    for (std::size_t i = 1; i <= m; ++i) {
      Word x = Word::generator(m, static_cast<int>(i));
      if (f.image(static_cast<int>(i)) != conj(g, x)) {
        return std::nullopt;
      }
    }
    return g;
  }

  IntMatrix abelianization_matrix(GroupMap const& f) {
    std::size_t const m = f.rank();
    IntMatrix         a(m, m);
    for (std::size_t c = 0; c < m; ++c) {
      for (Letter l : f.images()[c].letters()) {
        a(static_cast<std::size_t>(l.index - 1), c) += l.sign;
      }
    }
    return a;
  }

  bool is_homology_trivial(GroupMap const& f) {
    return abelianization_matrix(f).is_identity();
  }

  std::vector<GroupMap> nielsen_generators(std::size_t n) {
    std::vector<GroupMap> out;
    auto gen = [n](int i, int s = 1) { return Word::generator(n, i, s); };
    auto identity_images = [&] {
      std::vector<Word> v;
      for (std::size_t i = 1; i <= n; ++i) {
        v.push_back(gen(static_cast<int>(i)));
      }
      return v;
    };
    if (n >= 2) {
      auto img = identity_images(), back = identity_images();
      img[0]  = mul(gen(1), gen(2));
      back[0] = mul(gen(1), gen(2, -1));
      out.emplace_back(img, back);
    }
    {
      auto img = identity_images();
      img[0]   = gen(1, -1);
      out.emplace_back(img, img);
    }
    if (n >= 2) {
      std::vector<Word> img, back;
      for (std::size_t i = 1; i <= n; ++i) {
        img.push_back(gen(static_cast<int>(i % n + 1)));
        back.push_back(gen(static_cast<int>((i + n - 2) % n + 1)));
      }
      out.emplace_back(img, back);
      auto sw = identity_images();
      std::swap(sw[0], sw[1]);
      out.emplace_back(sw, sw);
    }
    return out;
  }

}  // namespace torelli

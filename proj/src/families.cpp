#include "qgase/families.hpp"

#include <string>

#include "qgase/error.hpp"

namespace qgase {

namespace {

int pendant_count(Letter l) { return l == Letter::alpha ? 1 : 2; }

void require_units(int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "unit count must be >= 1, got " + std::to_string(n));
}

}  // namespace

Word word_from_string(std::string_view text) {
  if (text.empty()) fail(ErrorCode::empty_word, "word must be non-empty");
  Word word;
  word.reserve(text.size());
  for (char c : text) {
    if (c == 'a')
      word.push_back(Letter::alpha);
    else if (c == 'b')
      word.push_back(Letter::beta);
    else
      fail(ErrorCode::invalid_argument,
           std::string("word may contain only 'a' and 'b', got '") + c + "'");
  }
  return word;
}

std::string word_to_string(const Word& word) {
  std::string text;
  text.reserve(word.size());
  for (Letter l : word) text += l == Letter::alpha ? 'a' : 'b';
  return text;
}

Word uniform_word(Letter letter, int length) {
  if (length < 1) fail(ErrorCode::empty_word, "word length must be >= 1");
  return Word(static_cast<std::size_t>(length), letter);
}

MetricGraph build_line(const Word& word) {
  const int n = static_cast<int>(word.size());
  if (n == 0) fail(ErrorCode::empty_word, "line builder needs a non-empty word");
  std::vector<Edge> edges;
  for (int m = 0; m + 1 < n; ++m) edges.push_back({m, m + 1, 1.0});
  int next = n;
  for (int m = 0; m < n; ++m)
    for (int p = 0; p < pendant_count(word[m]); ++p) edges.push_back({m, next++, 1.0});
  std::vector<Lead> leads{{0, 0}, {n > 1 ? n - 1 : 0, 1}};
  return build_graph(next, std::move(edges), std::move(leads));
}

namespace {

MetricGraph build_ring(const Word& word, bool leads_on_pendants) {
  const int n = static_cast<int>(word.size());
  if (n == 0) fail(ErrorCode::empty_word, "circle builder needs a non-empty word");
  if (n < 3)
    fail(ErrorCode::word_too_short,
         "circle needs a word of length >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int m = 0; m < n; ++m) edges.push_back({m, (m + 1) % n, 1.0});
  int next = n;
  int first_pendant_c1 = -1, first_pendant_c2 = -1;
  for (int m = 0; m < n; ++m)
    for (int p = 0; p < pendant_count(word[m]); ++p) {
      if (p == 0 && m == 0) first_pendant_c1 = next;
      if (p == 0 && m == 1) first_pendant_c2 = next;
      edges.push_back({m, next++, 1.0});
    }
  std::vector<Lead> leads;
  if (leads_on_pendants)
    leads = {{first_pendant_c1, 0}, {first_pendant_c2, 1}};
  else
    leads = {{0, 0}, {1, 1}};
  return build_graph(next, std::move(edges), std::move(leads));
}

}  // namespace

MetricGraph build_circle(const Word& word) { return build_ring(word, false); }

MetricGraph build_circle2(const Word& word) { return build_ring(word, true); }

Word fibonacci_word(int generation) {
  if (generation < 1)
    fail(ErrorCode::invalid_argument, "generation must be >= 1, got " + std::to_string(generation));
  Word word{Letter::alpha};
  for (int g = 1; g < generation; ++g) {
    Word next;
    next.reserve(2 * word.size());
    for (Letter l : word) {
      if (l == Letter::alpha) {
        next.push_back(Letter::alpha);
        next.push_back(Letter::beta);
      } else {
        next.push_back(Letter::alpha);
      }
    }
    word = std::move(next);
  }
  return word;
}

Word random_word(int length, RandomStream& stream) {
  if (length < 1) fail(ErrorCode::empty_word, "word length must be >= 1");
  Word word(static_cast<std::size_t>(length), Letter::alpha);
  for (auto& letter : word) letter = stream.next_bit() ? Letter::beta : Letter::alpha;
  return word;
}

MetricGraph build_gamma_chain(int n) {
  require_units(n);
  std::vector<Edge> edges;
  for (int m = 0; m < n; ++m) {
    const int a = 4 * m, b = a + 1, c = a + 2, d = a + 3;
    edges.push_back({a, b, 1.0});  // shared edge of the two triangles
    edges.push_back({a, c, 1.0});
    edges.push_back({b, c, 1.0});
    edges.push_back({a, d, 1.0});
    edges.push_back({b, d, 1.0});
    if (m + 1 < n) edges.push_back({d, 4 * (m + 1) + 2, 1.0});
  }
  std::vector<Lead> leads{{2, 0}, {4 * n - 1, 1}};
  return build_graph(4 * n, std::move(edges), std::move(leads));
}

MetricGraph build_delta_chain(int n) {
  require_units(n);
  std::vector<Edge> edges;
  for (int m = 0; m < n; ++m) {
    const int a = 5 * m, b = a + 1, c = a + 2, d = a + 3, e = a + 4;
    edges.push_back({a, b, 1.0});  // shared triangle of the two tetrahedra
    edges.push_back({a, c, 1.0});
    edges.push_back({b, c, 1.0});
    edges.push_back({d, a, 1.0});
    edges.push_back({d, b, 1.0});
    edges.push_back({d, c, 1.0});
    edges.push_back({e, a, 1.0});
    edges.push_back({e, b, 1.0});
    edges.push_back({e, c, 1.0});
    if (m + 1 < n) edges.push_back({e, 5 * (m + 1) + 3, 1.0});
  }
  std::vector<Lead> leads{{3, 0}, {5 * n - 1, 1}};
  return build_graph(5 * n, std::move(edges), std::move(leads));
}

MetricGraph build_square_stripe(int n) {
  require_units(n);
  // rails: top 0..n, bottom n+1..2n+1; apexes 2n+2 (left), 2n+3 (right)
  const int bottom = n + 1;
  const int left = 2 * n + 2, right = 2 * n + 3;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, i + 1, 1.0});
    edges.push_back({bottom + i, bottom + i + 1, 1.0});
  }
  for (int i = 0; i <= n; ++i) edges.push_back({i, bottom + i, 1.0});
  edges.push_back({left, 0, 1.0});
  edges.push_back({left, bottom, 1.0});
  edges.push_back({right, n, 1.0});
  edges.push_back({right, bottom + n, 1.0});
  std::vector<Lead> leads{{left, 0}, {right, 1}};
  return build_graph(2 * n + 4, std::move(edges), std::move(leads));
}

MetricGraph build_prism_tube(int n) {
  require_units(n);
  // layer i occupies vertices 3i..3i+2; apexes 3(n+1), 3(n+1)+1
  const int left = 3 * (n + 1), right = left + 1;
  std::vector<Edge> edges;
  for (int i = 0; i <= n; ++i) {
    const int base = 3 * i;
    edges.push_back({base, base + 1, 1.0});
    edges.push_back({base + 1, base + 2, 1.0});
    edges.push_back({base, base + 2, 1.0});
    if (i < n)
      for (int j = 0; j < 3; ++j) edges.push_back({base + j, base + 3 + j, 1.0});
  }
  for (int j = 0; j < 3; ++j) edges.push_back({left, j, 1.0});
  for (int j = 0; j < 3; ++j) edges.push_back({right, 3 * n + j, 1.0});
  std::vector<Lead> leads{{left, 0}, {right, 1}};
  return build_graph(3 * n + 5, std::move(edges), std::move(leads));
}

bool family_uses_word(Family f) {
  return f == Family::line || f == Family::circle || f == Family::circle2;
}

Family family_from_string(std::string_view name) {
  if (name == "line") return Family::line;
  if (name == "circle") return Family::circle;
  if (name == "circle2") return Family::circle2;
  if (name == "gamma") return Family::gamma;
  if (name == "delta") return Family::delta;
  if (name == "squares") return Family::squares;
  if (name == "prisms") return Family::prisms;
  fail(ErrorCode::unsupported_family, std::string("unknown family '") + std::string(name) + "'");
}

const char* to_string(Family f) {
  switch (f) {
    case Family::line: return "line";
    case Family::circle: return "circle";
    case Family::circle2: return "circle2";
    case Family::gamma: return "gamma";
    case Family::delta: return "delta";
    case Family::squares: return "squares";
    case Family::prisms: return "prisms";
  }
  return "?";
}

MetricGraph build_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::line: return build_line(spec.word);
    case Family::circle: return build_circle(spec.word);
    case Family::circle2: return build_circle2(spec.word);
    case Family::gamma: return build_gamma_chain(spec.units);
    case Family::delta: return build_delta_chain(spec.units);
    case Family::squares: return build_square_stripe(spec.units);
    case Family::prisms: return build_prism_tube(spec.units);
  }
  fail(ErrorCode::unsupported_family, "unhandled family tag");
}

}  // namespace qgase

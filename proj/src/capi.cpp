#include "muposet.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <sstream>
#include <string>
#include <utility>

#include "muposet/error.hpp"
#include "muposet/formulas.hpp"
#include "muposet/permutation.hpp"
#include "muposet/poset.hpp"
#include "muposet/report.hpp"
#include "muposet/verify.hpp"

struct muposet_perm {
  muposet::Permutation value;
};

struct muposet_report {
  muposet::VerificationReport value;
};

namespace {

thread_local std::string tl_last_error;

muposet_status fail(muposet_status status, const char* message) {
  tl_last_error = message;
  return status;
}

muposet_status map_kind(muposet::ErrorKind kind) {
  using muposet::ErrorKind;
  switch (kind) {
    case ErrorKind::invalid_word: return MUPOSET_ERR_INVALID_WORD;
    case ErrorKind::out_of_range: return MUPOSET_ERR_OUT_OF_RANGE;
    case ErrorKind::out_of_class: return MUPOSET_ERR_OUT_OF_CLASS;
    case ErrorKind::not_contained: return MUPOSET_ERR_NOT_CONTAINED;
    case ErrorKind::too_large: return MUPOSET_ERR_TOO_LARGE;
    case ErrorKind::overflow: return MUPOSET_ERR_OVERFLOW;
    case ErrorKind::domain: return MUPOSET_ERR_DOMAIN;
  }
  return MUPOSET_ERR_INTERNAL;
}

template <typename Fn>
muposet_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const muposet::Error& e) {
    tl_last_error = e.what();
    return map_kind(e.kind());
  } catch (const std::exception& e) {
    tl_last_error = e.what();
    return MUPOSET_ERR_INTERNAL;
  } catch (...) {
    tl_last_error = "unknown failure";
    return MUPOSET_ERR_INTERNAL;
  }
}

muposet_status give_string(const std::string& text, char** out) {
  char* copy = static_cast<char*>(std::malloc(text.size() + 1));
  if (!copy) return fail(MUPOSET_ERR_INTERNAL, "out of memory");
  std::memcpy(copy, text.c_str(), text.size() + 1);
  *out = copy;
  return MUPOSET_OK;
}

const char* case_reason(muposet::Theorem4Case c) {
  using muposet::Theorem4Case;
  switch (c) {
    case Theorem4Case::short_length:
      return "length at most 2, handled directly";
    case Theorem4Case::part1:
      return "begins with 12 or ends with (n-1)n";
    case Theorem4Case::part2:
      return "contains a triple adjacency";
    case Theorem4Case::part3:
      return "more than two adjacencies";
    case Theorem4Case::part4a:
      return "two adjacencies, the earlier value above the later";
    case Theorem4Case::part4b:
      return "two adjacencies, the earlier value below the later";
    case Theorem4Case::part5a:
      return "one adjacency, before the descent, first letter not 1";
    case Theorem4Case::part5b:
      return "one adjacency, before the descent, first letter 1";
    case Theorem4Case::part5c:
      return "one adjacency, after the descent, last letter not n";
    case Theorem4Case::part5d:
      return "one adjacency, after the descent, last letter n";
    case Theorem4Case::part6a:
      return "no adjacency, even length, first letter 1";
    case Theorem4Case::part6b:
      return "no adjacency, even length, first letter 2";
    case Theorem4Case::part6c:
      return "no adjacency, odd length";
  }
  return "";
}

void render_ints(std::ostringstream& out, const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v[i];
  }
}

}  // namespace

extern "C" {

const char* muposet_last_error(void) { return tl_last_error.c_str(); }

void muposet_string_free(char* text) { std::free(text); }

muposet_status muposet_perm_parse(const char* text, muposet_perm** out) {
  if (!text || !out) return fail(MUPOSET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new muposet_perm{muposet::Permutation::parse(text)};
    return MUPOSET_OK;
  });
}

muposet_status muposet_perm_from_values(const int* values, size_t count,
                                        muposet_perm** out) {
  if (!out || (!values && count > 0))
    return fail(MUPOSET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<int> v(values, values + count);
    *out = new muposet_perm{muposet::Permutation(std::move(v))};
    return MUPOSET_OK;
  });
}

void muposet_perm_free(muposet_perm* perm) { delete perm; }

int muposet_perm_length(const muposet_perm* perm) {
  return perm ? perm->value.size() : 0;
}

muposet_status muposet_perm_to_string(const muposet_perm* perm, char** out) {
  if (!perm || !out) return fail(MUPOSET_ERR_INVALID_ARGUMENT, "null argument");
  return give_string(perm->value.str(), out);
}

muposet_status muposet_mobius(const muposet_perm* lower, const muposet_perm* upper,
                              long long* out) {
  if (!lower || !upper || !out)
    return fail(MUPOSET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = muposet::mobius(lower->value, upper->value);
    return MUPOSET_OK;
  });
}

muposet_status muposet_mobius_top(const muposet_perm* pi, long long* out) {
  if (!pi || !out) return fail(MUPOSET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = muposet::mobius_top(pi->value);
    return MUPOSET_OK;
  });
}

muposet_status muposet_downset_text(const muposet_perm* pi, int min_length,
                                    char** out) {
  if (!pi || !out) return fail(MUPOSET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    if (pi->value.size() > muposet::Downset::max_root_length)
      muposet::raise(muposet::ErrorKind::too_large,
                     "interval too large: hosts longer than 14 letters are not supported");
    const muposet::Downset ds(pi->value);
    const auto mu = ds.mobius_vector_from(muposet::Permutation::identity(1));
    std::ostringstream text;
    const auto& members = ds.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i].size() < min_length) continue;
      text << members[i].str() << ' ' << mu[i] << '\n';
    }
    return give_string(text.str(), out);
  });
}

muposet_status muposet_theorem4(const muposet_perm* pi, long long* value,
                                char** case_label) {
  if (!pi || !value) return fail(MUPOSET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const muposet::Theorem4Result res = muposet::theorem4(pi->value);
    *value = res.value;
    if (case_label) return give_string(muposet::to_string(res.case_label), case_label);
    return MUPOSET_OK;
  });
}

muposet_status muposet_theorem4_explain(const muposet_perm* pi, char** out) {
  if (!pi || !out) return fail(MUPOSET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const muposet::Theorem4Result res = muposet::theorem4(pi->value);
    std::ostringstream text;
    text << "pi = " << pi->value.str() << " (length " << pi->value.size() << ")\n";
    const auto descents = muposet::descent_positions(pi->value);
    text << "descents:";
    if (descents.empty()) text << " none";
    for (int d : descents) text << ' ' << d;
    text << '\n';
    const auto adj = muposet::adjacencies(pi->value);
    text << "adjacencies:";
    if (adj.empty()) text << " none";
    for (const auto& a : adj) text << " value " << a.value << " at position " << a.position;
    text << '\n';
    text << "case: " << muposet::to_string(res.case_label) << " ("
         << case_reason(res.case_label) << ")\n";
    text << "mu = " << res.value << '\n';
    return give_string(text.str(), out);
  });
}

muposet_status muposet_conjecture1(const muposet_perm* sigma, char shape, int n,
                                   long long* value, char** detail) {
  if (!sigma || !value) return fail(MUPOSET_ERR_INVALID_ARGUMENT, "null argument");
  if (shape != 'M' && shape != 'W')
    return fail(MUPOSET_ERR_INVALID_ARGUMENT, "shape must be 'M' or 'W'");
  return guarded([&] {
    const auto target_shape =
        shape == 'M' ? muposet::TargetShape::M : muposet::TargetShape::W;
    const muposet::Conj1Result res =
        muposet::conjecture1(sigma->value, target_shape, n);
    *value = res.value;
    if (detail) {
      std::ostringstream text;
      text << "branch=" << muposet::to_string(res.branch) << " m=" << res.m
           << " adjacencies=" << res.adjacency_count
           << " related=" << (res.related_to_target ? "yes" : "no");
      return give_string(text.str(), detail);
    }
    return MUPOSET_OK;
  });
}

muposet_status muposet_conjecture2(int m, const muposet_perm* pi, long long* value) {
  if (!pi || !value) return fail(MUPOSET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *value = muposet::conjecture2(m, pi->value);
    return MUPOSET_OK;
  });
}

muposet_status muposet_conjecture2_stats(int m, const muposet_perm* pi, char** out) {
  if (!pi || !out) return fail(MUPOSET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const muposet::ConjTwoStats st = muposet::conjecture2_stats(m, pi->value);
    std::ostringstream text;
    text << "a = " << st.a << '\n';
    text << "n_hat = " << st.n_hat << '\n';
    text << "A =";
    if (!st.A.empty()) text << ' ';
    render_ints(text, st.A);
    text << '\n';
    text << "J_hat =";
    if (!st.J_hat.empty()) text << ' ';
    render_ints(text, st.J_hat);
    text << '\n';
    text << "j_a_pre =";
    if (!st.j_a_pre.empty()) text << ' ';
    render_ints(text, st.j_a_pre);
    text << '\n';
    text << "j_b_pre =";
    if (!st.j_b_pre.empty()) text << ' ';
    render_ints(text, st.j_b_pre);
    text << '\n';
    text << "j_a =";
    if (!st.j_a.empty()) text << ' ';
    render_ints(text, st.j_a);
    text << '\n';
    text << "j_b =";
    if (!st.j_b.empty()) text << ' ';
    render_ints(text, st.j_b);
    text << '\n';
    text << "epsilon = " << st.epsilon << '\n';
    text << "alpha = " << st.alpha << '\n';
    text << "beta = " << st.beta << '\n';
    text << "s = " << st.s << '\n';
    text << "t = " << st.t << '\n';
    text << "lambda = " << st.lambda << '\n';
    text << "sigma = " << st.sigma << '\n';
    return give_string(text.str(), out);
  });
}

muposet_status muposet_verify_theorem4(int max_n, int jobs, muposet_report** out) {
  if (!out) return fail(MUPOSET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new muposet_report{muposet::verify_theorem4(max_n, {jobs})};
    return MUPOSET_OK;
  });
}

muposet_status muposet_verify_conjecture1(int max_n, int jobs, muposet_report** out) {
  if (!out) return fail(MUPOSET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new muposet_report{muposet::verify_conjecture1(max_n, {jobs})};
    return MUPOSET_OK;
  });
}

muposet_status muposet_verify_conjecture2(int max_m, int max_n, int jobs,
                                          muposet_report** out) {
  if (!out) return fail(MUPOSET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new muposet_report{muposet::verify_conjecture2(max_m, max_n, {jobs})};
    return MUPOSET_OK;
  });
}

muposet_status muposet_verify_lemmas(int max_n, int jobs, muposet_report** out) {
  if (!out) return fail(MUPOSET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new muposet_report{muposet::verify_lemmas(max_n, {jobs})};
    return MUPOSET_OK;
  });
}

void muposet_report_free(muposet_report* report) { delete report; }

long long muposet_report_failed(const muposet_report* report) {
  return report ? report->value.failed : -1;
}

muposet_status muposet_report_render(const muposet_report* report,
                                     muposet_format format, char** out) {
  if (!report || !out) return fail(MUPOSET_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::string text;
    switch (format) {
      case MUPOSET_FORMAT_TEXT: text = muposet::to_text(report->value); break;
      case MUPOSET_FORMAT_JSON: text = muposet::to_json(report->value); break;
      case MUPOSET_FORMAT_CSV: text = muposet::to_csv(report->value); break;
      default: return fail(MUPOSET_ERR_INVALID_ARGUMENT, "unknown format");
    }
    return give_string(text, out);
  });
}

}  // extern "C"

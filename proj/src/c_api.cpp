#include "tourn/tourn.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "tourn/enumeration.hpp"
#include "tourn/isomorphism.hpp"
#include "tourn/modules.hpp"
#include "tourn/pairings.hpp"
#include "tourn/records.hpp"
#include "tourn/theorems.hpp"
#include "tourn/tournament.hpp"

struct tourn_tournament {
  tourn::Tournament value;
};

struct tourn_family {
  tourn::PairFamily value;
};

namespace {

thread_local std::string last_error;

tourn_status fail(tourn_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, mapping library exceptions onto status codes.
template <class Body>
tourn_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const tourn::InputError& e) {
    return fail(TOURN_ERR_INPUT, e.what());
  } catch (const tourn::GuardError& e) {
    return fail(TOURN_ERR_GUARD, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TOURN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TOURN_ERR_INTERNAL, e.what());
  }
}

tourn_status null_argument(const char* where) {
  return fail(TOURN_ERR_ARGUMENT, std::string(where) + ": null argument");
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tourn_status emit_tournament(tourn::Tournament t, tourn_tournament** out) {
  *out = new tourn_tournament{std::move(t)};
  return TOURN_OK;
}

tourn::EnumSpec to_spec(const tourn_enum_options& o) {
  tourn::EnumSpec spec;
  spec.n = o.n;
  switch (o.kind) {
    case TOURN_KIND_PAIRING: spec.kind = tourn::EnumKind::pairing; break;
    case TOURN_KIND_PARTIAL_PAIRING: spec.kind = tourn::EnumKind::partial_pairing; break;
    case TOURN_KIND_QUASI: spec.kind = tourn::EnumKind::quasi; break;
    case TOURN_KIND_PARTIAL_QUASI: spec.kind = tourn::EnumKind::partial_quasi; break;
    default: throw tourn::InputError("unknown kind " + std::to_string(static_cast<int>(o.kind)));
  }
  switch (o.filter) {
    case TOURN_FILTER_ALL: spec.filter = tourn::EnumFilter::all; break;
    case TOURN_FILTER_IRREDUCIBLE: spec.filter = tourn::EnumFilter::irreducible_only; break;
    case TOURN_FILTER_INDECOMPOSABLE: spec.filter = tourn::EnumFilter::indecomposable_inv_only; break;
    default: throw tourn::InputError("unknown filter " + std::to_string(static_cast<int>(o.filter)));
  }
  spec.include_empty = o.include_empty != 0;
  if (o.max_n > 0) spec.max_n = o.max_n;
  return spec;
}

tourn::VerifyOptions verify_options(int jobs, int max_n) {
  tourn::VerifyOptions o;
  o.jobs = jobs > 0 ? jobs : 1;
  if (max_n > 0) o.max_n = max_n;
  return o;
}

tourn_status finish_report(const tourn::VerificationReport& report, char** report_json,
                           size_t* violations) {
  *report_json = copy_string(tourn::report_json(report).dump());
  *violations = report.violations.size();
  return TOURN_OK;
}

}  // namespace

extern "C" {

const char* tourn_version(void) { return "0.1.0"; }

const char* tourn_last_error(void) { return last_error.c_str(); }

void tourn_string_free(char* s) { std::free(s); }

tourn_status tourn_kind_parse(const char* name, tourn_kind* out) {
  if (name == nullptr || out == nullptr) return null_argument("tourn_kind_parse");
  return guarded([&] {
    *out = static_cast<tourn_kind>(tourn::parse_kind(name));
    return TOURN_OK;
  });
}

tourn_status tourn_transitive(int n, tourn_tournament** out) {
  if (out == nullptr) return null_argument("tourn_transitive");
  return guarded([&] { return emit_tournament(tourn::transitive(n), out); });
}

tourn_status tourn_tournament_parse(const char* text, tourn_tournament** out) {
  if (text == nullptr || out == nullptr) return null_argument("tourn_tournament_parse");
  return guarded([&] { return emit_tournament(tourn::parse_tournament(text), out); });
}

tourn_status tourn_tournament_format(const tourn_tournament* t, char** out) {
  if (t == nullptr || out == nullptr) return null_argument("tourn_tournament_format");
  return guarded([&] {
    *out = copy_string(tourn::format_tournament(t->value));
    return TOURN_OK;
  });
}

tourn_status tourn_tournament_dot(const tourn_tournament* t, char** out) {
  if (t == nullptr || out == nullptr) return null_argument("tourn_tournament_dot");
  return guarded([&] {
    *out = copy_string(tourn::to_dot(t->value));
    return TOURN_OK;
  });
}

int tourn_tournament_order(const tourn_tournament* t) { return t == nullptr ? -1 : t->value.order(); }

tourn_status tourn_tournament_arc(const tourn_tournament* t, int x, int y, int* out) {
  if (t == nullptr || out == nullptr) return null_argument("tourn_tournament_arc");
  if (x < 0 || y < 0 || x >= t->value.order() || y >= t->value.order() || x == y) {
    return fail(TOURN_ERR_INPUT, "tourn_tournament_arc: invalid vertex pair (" +
                                     std::to_string(x) + ", " + std::to_string(y) + ")");
  }
  *out = t->value.arc(x, y) ? 1 : 0;
  return TOURN_OK;
}

void tourn_tournament_free(tourn_tournament* t) { delete t; }

tourn_status tourn_dual(const tourn_tournament* t, tourn_tournament** out) {
  if (t == nullptr || out == nullptr) return null_argument("tourn_dual");
  return guarded([&] { return emit_tournament(tourn::dual(t->value), out); });
}

tourn_status tourn_reverse_pairs(const tourn_tournament* t, const tourn_family* pairs,
                                 tourn_tournament** out) {
  if (t == nullptr || pairs == nullptr || out == nullptr) return null_argument("tourn_reverse_pairs");
  return guarded([&] { return emit_tournament(tourn::reverse_pairs(t->value, pairs->value), out); });
}

tourn_status tourn_is_module(const tourn_tournament* t, const int* vertices, size_t count, int* out) {
  if (t == nullptr || out == nullptr || (vertices == nullptr && count > 0)) {
    return null_argument("tourn_is_module");
  }
  return guarded([&] {
    tourn::VertexSet m(std::vector<tourn::Vertex>(vertices, vertices + count));
    *out = tourn::is_module(t->value, m) ? 1 : 0;
    return TOURN_OK;
  });
}

tourn_status tourn_is_indecomposable(const tourn_tournament* t, int* out) {
  if (t == nullptr || out == nullptr) return null_argument("tourn_is_indecomposable");
  return guarded([&] {
    *out = tourn::is_indecomposable(t->value) ? 1 : 0;
    return TOURN_OK;
  });
}

tourn_status tourn_is_isomorphic(const tourn_tournament* a, const tourn_tournament* b, int* out) {
  if (a == nullptr || b == nullptr || out == nullptr) return null_argument("tourn_is_isomorphic");
  return guarded([&] {
    *out = tourn::is_isomorphic(a->value, b->value) ? 1 : 0;
    return TOURN_OK;
  });
}

tourn_status tourn_vertex_set_parse(const char* text, int* buffer, size_t capacity, size_t* count) {
  if (text == nullptr || count == nullptr || (buffer == nullptr && capacity > 0)) {
    return null_argument("tourn_vertex_set_parse");
  }
  return guarded([&] {
    auto set = tourn::parse_vertex_set(text);
    *count = set.size();
    std::size_t k = 0;
    for (auto v : set) {
      if (k == capacity) break;
      buffer[k++] = v;
    }
    return TOURN_OK;
  });
}

tourn_status tourn_family_parse(const char* text, int ambient, tourn_family** out) {
  if (text == nullptr || out == nullptr) return null_argument("tourn_family_parse");
  return guarded([&] {
    *out = new tourn_family{tourn::parse_pairs(text, ambient)};
    return TOURN_OK;
  });
}

tourn_status tourn_family_format(const tourn_family* f, char** out) {
  if (f == nullptr || out == nullptr) return null_argument("tourn_family_format");
  return guarded([&] {
    *out = copy_string(tourn::format_pairs(f->value));
    return TOURN_OK;
  });
}

int tourn_family_ambient(const tourn_family* f) { return f == nullptr ? -1 : f->value.ambient(); }

void tourn_family_free(tourn_family* f) { delete f; }

tourn_status tourn_family_classify(const tourn_family* f, tourn_family_class* out) {
  if (f == nullptr || out == nullptr) return null_argument("tourn_family_classify");
  switch (tourn::classify(f->value)) {
    case tourn::FamilyKind::pairing: *out = TOURN_CLASS_PAIRING; break;
    case tourn::FamilyKind::quasi_pairing: *out = TOURN_CLASS_QUASI_PAIRING; break;
    case tourn::FamilyKind::neither: *out = TOURN_CLASS_NEITHER; break;
  }
  return TOURN_OK;
}

tourn_status tourn_family_is_irreducible(const tourn_family* f, int* out) {
  if (f == nullptr || out == nullptr) return null_argument("tourn_family_is_irreducible");
  return guarded([&] {
    *out = tourn::is_irreducible(f->value) ? 1 : 0;
    return TOURN_OK;
  });
}

tourn_status tourn_enumerate(const tourn_enum_options* options, tourn_line_callback callback,
                             void* user) {
  if (options == nullptr || callback == nullptr) return null_argument("tourn_enumerate");
  return guarded([&] {
    auto spec = to_spec(*options);
    tourn::for_each_family(spec, [&](const tourn::PairFamily& f) {
      auto line = tourn::family_record(spec.n, spec.kind, f).dump();
      return callback(line.c_str(), user) == 0;
    });
    return TOURN_OK;
  });
}

tourn_status tourn_census(const tourn_enum_options* options, tourn_line_callback callback,
                          void* user) {
  if (options == nullptr || callback == nullptr) return null_argument("tourn_census");
  return guarded([&] {
    auto spec = to_spec(*options);
    for (const auto& e : tourn::indecomposable_census(spec, options->jobs > 0 ? options->jobs : 1)) {
      auto line = tourn::family_record(spec.n, spec.kind, e.family, true, e.irreducible, e.class_id)
                      .dump();
      if (callback(line.c_str(), user) != 0) break;
    }
    return TOURN_OK;
  });
}

tourn_status tourn_count_irreducible_pairings(int m, uint64_t* out) {
  if (out == nullptr) return null_argument("tourn_count_irreducible_pairings");
  return guarded([&] {
    *out = tourn::count_irreducible_pairings(m);
    return TOURN_OK;
  });
}

tourn_status tourn_verify(int theorem, int n_min, int n_max, int jobs, int max_n,
                          char** report_json, size_t* violations) {
  if (report_json == nullptr || violations == nullptr) return null_argument("tourn_verify");
  return guarded([&] {
    return finish_report(tourn::verify_range(theorem, n_min, n_max, verify_options(jobs, max_n)),
                         report_json, violations);
  });
}

tourn_status tourn_verify_corollaries(int n_min, int n_max, int jobs, int max_n,
                                      char** report_json, size_t* violations) {
  if (report_json == nullptr || violations == nullptr) {
    return null_argument("tourn_verify_corollaries");
  }
  return guarded([&] {
    return finish_report(tourn::corollary_checks(n_min, n_max, verify_options(jobs, max_n)),
                         report_json, violations);
  });
}

}  // extern "C"

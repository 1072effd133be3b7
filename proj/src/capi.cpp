#include "opcat.h"

#include <string>

#include "opcat/commands.hpp"
#include "opcat/error.hpp"
#include "opcat/homology.hpp"
#include "opcat/operad.hpp"

struct opcat_report {
  nlohmann::json body;
  std::string text;
};

struct opcat_operad {
  opcat::OperadPtr op;
};

struct opcat_space {
  opcat::FiniteSSet k;
};

namespace {

thread_local std::string last_error;

opcat_status code_of(opcat::ErrorCode c) {
  switch (c) {
    case opcat::ErrorCode::Parse: return OPCAT_ERR_PARSE;
    case opcat::ErrorCode::Validation: return OPCAT_ERR_VALIDATION;
    case opcat::ErrorCode::Domain: return OPCAT_ERR_DOMAIN;
    case opcat::ErrorCode::Bound: return OPCAT_ERR_BOUND;
    case opcat::ErrorCode::Internal: return OPCAT_ERR_INTERNAL;
  }
  return OPCAT_ERR_INTERNAL;
}

template <class F>
opcat_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const opcat::Error& e) {
    last_error = e.what();
    return code_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("JSON: ") + e.what();
    return OPCAT_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return OPCAT_ERR_BOUND;
  } catch (const std::exception& e) {
    last_error = e.what();
    return OPCAT_ERR_INTERNAL;
  }
}

opcat_status bad_argument(const char* what) {
  last_error = what;
  return OPCAT_ERR_ARGUMENT;
}

}  // namespace

extern "C" {

const char* opcat_version(void) { return opcat::kVersion; }

size_t opcat_command_count(void) { return opcat::command_names().size(); }

const char* opcat_command_name(size_t i) {
  const auto& n = opcat::command_names();
  return i < n.size() ? n[i].c_str() : nullptr;
}

const char* opcat_last_error(void) { return last_error.c_str(); }

opcat_status opcat_run(const char* command, const char* manifest_json, const char* options_json, opcat_report** out) {
  if (!out) return bad_argument("opcat_run: out is NULL");
  *out = nullptr;
  if (!command || !manifest_json) return bad_argument("opcat_run: command and manifest are required");
  return guarded([&] {
    nlohmann::json m = nlohmann::json::parse(manifest_json);
    nlohmann::json o = options_json ? nlohmann::json::parse(options_json) : nlohmann::json::object();
    auto* r = new opcat_report{opcat::run_command(command, m, o), {}};
    *out = r;
    return r->body.value("ok", false) ? OPCAT_OK : OPCAT_CHECK_FAILED;
  });
}

const char* opcat_report_json(opcat_report* r, int indent) {
  if (!r) return nullptr;
  r->text = r->body.dump(indent < 0 ? -1 : indent);
  return r->text.c_str();
}

int opcat_report_ok(const opcat_report* r) { return r && r->body.value("ok", false) ? 1 : 0; }

void opcat_report_free(opcat_report* r) { delete r; }

opcat_status opcat_operad_new(const char* name, size_t points, size_t bound, opcat_operad** out) {
  if (!out || !name) return bad_argument("opcat_operad_new: name and out are required");
  *out = nullptr;
  return guarded([&] {
    std::string n = name;
    opcat::OperadPtr op;
    if (n == "assoc") op = std::make_shared<const opcat::Operad>(opcat::associativity_operad(bound));
    else if (n == "comm") op = std::make_shared<const opcat::Operad>(opcat::commutativity_operad(bound));
    else if (n == "end") op = std::make_shared<const opcat::Operad>(opcat::endomorphism_operad(points, bound));
    else opcat::fail(opcat::ErrorCode::Parse, "unknown operad '" + n + "'");
    *out = new opcat_operad{op};
    return OPCAT_OK;
  });
}

size_t opcat_operad_bound(const opcat_operad* op) { return op ? op->op->bound() : 0; }

size_t opcat_operad_card(const opcat_operad* op, size_t arity) {
  return op && arity <= op->op->bound() ? op->op->card(arity) : 0;
}

opcat_status opcat_operad_check(const opcat_operad* op, opcat_report** out) {
  if (!op || !out) return bad_argument("opcat_operad_check: operad and out are required");
  *out = nullptr;
  return guarded([&] {
    opcat::Report r = opcat::check_operad(*op->op);
    nlohmann::json body{{"tool", "opcat"}, {"version", opcat::kVersion}, {"ok", r.ok()}, {"reports", {r.to_json()}}};
    *out = new opcat_report{body, {}};
    return r.ok() ? OPCAT_OK : OPCAT_CHECK_FAILED;
  });
}

void opcat_operad_free(opcat_operad* op) { delete op; }

opcat_status opcat_space_new(const char* space_json, size_t levels, opcat_space** out) {
  if (!out || !space_json) return bad_argument("opcat_space_new: space and out are required");
  *out = nullptr;
  return guarded([&] {
    opcat::SimplicialObject s = opcat::space_from_json(nlohmann::json::parse(space_json), levels);
    *out = new opcat_space{opcat::underlying(s)};
    return OPCAT_OK;
  });
}

size_t opcat_space_levels(const opcat_space* s) { return s ? s->k.size.size() : 0; }

size_t opcat_space_size(const opcat_space* s, size_t level) {
  return s && level < s->k.size.size() ? s->k.size[level] : 0;
}

opcat_status opcat_space_homology(const opcat_space* s, size_t degree, size_t* ranks, size_t* torsion_counts) {
  if (!s || !ranks) return bad_argument("opcat_space_homology: space and ranks are required");
  return guarded([&] {
    auto h = opcat::homology(s->k, degree);
    for (size_t q = 0; q <= degree; ++q) {
      ranks[q] = h[q].rank;
      if (torsion_counts) torsion_counts[q] = h[q].torsion.size();
    }
    return OPCAT_OK;
  });
}

void opcat_space_free(opcat_space* s) { delete s; }

}  // extern "C"

#include "residuum/capi.h"

#include <string>

#include "residuum/commands.hpp"
#include "residuum/curve_document.hpp"
#include "residuum/errors.hpp"

using namespace residuum;

struct rsd_document {
  CurveDocument doc;
};

struct rsd_report {
  Report report;
  std::string text;
  std::string json;
};

namespace {

thread_local std::string g_last_error = "no error";

rsd_status status_for(const Error& e) {
  switch (e.kind()) {
    case Error::Kind::truncation_too_small:
      return RSD_TRUNCATION_ERROR;
    case Error::Kind::internal:
      return RSD_INTERNAL_ERROR;
    default:
      return RSD_INPUT_ERROR;
  }
}

rsd_report* wrap(Report&& rep) {
  auto* out = new rsd_report{std::move(rep), "", ""};
  out->text = out->report.text();
  out->json = out->report.json();
  return out;
}

template <typename Fn>
rsd_status run(rsd_report** out, Fn&& fn) {
  if (!out) {
    g_last_error = "output report pointer is null";
    return RSD_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    *out = wrap(fn());
    return RSD_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_for(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RSD_INTERNAL_ERROR;
  }
}

std::map<std::string, Rational> parse_params(const char* params) {
  std::map<std::string, Rational> out;
  if (!params) return out;
  std::string text(params);
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    if (!item.empty()) {
      size_t eq = item.find('=');
      if (eq == std::string::npos) {
        throw InvalidInput("parameter '" + item + "' is not of the form edge=p/q");
      }
      out[item.substr(0, eq)] = Rational::parse(item.substr(eq + 1));
    }
    pos = comma + 1;
  }
  return out;
}

} // namespace

extern "C" {

const char* rsd_version(void) { return "residuum 1.0.0"; }

const char* rsd_last_error(void) { return g_last_error.c_str(); }

rsd_status rsd_document_parse(const char* json_text, rsd_document** out) {
  if (!json_text || !out) {
    g_last_error = "null argument";
    return RSD_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    *out = new rsd_document{CurveDocument::parse(json_text)};
    return RSD_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_for(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RSD_INTERNAL_ERROR;
  }
}

void rsd_document_free(rsd_document* doc) { delete doc; }

void rsd_report_free(rsd_report* report) { delete report; }

const char* rsd_report_text(const rsd_report* report) {
  return report ? report->text.c_str() : "";
}

const char* rsd_report_json(const rsd_report* report) {
  return report ? report->json.c_str() : "";
}

int rsd_report_exit_code(const rsd_report* report) {
  return report ? report->report.exit_code() : kExitInputError;
}

rsd_status rsd_graph_invariants(const rsd_document* doc, rsd_report** out) {
  if (!doc) {
    g_last_error = "null document";
    return RSD_INVALID_ARGUMENT;
  }
  return run(out, [&] { return cmd_graph_invariants(doc->doc); });
}

rsd_status rsd_check_balance(const rsd_document* doc, int k, rsd_report** out) {
  if (!doc) {
    g_last_error = "null document";
    return RSD_INVALID_ARGUMENT;
  }
  std::optional<int> kk;
  if (k > 0) kk = k;
  return run(out, [&] { return cmd_check_balance(doc->doc, kk); });
}

rsd_status rsd_construct(const rsd_document* doc, int k, const char* params,
                         rsd_report** out) {
  if (!doc) {
    g_last_error = "null document";
    return RSD_INVALID_ARGUMENT;
  }
  if (k < 1) {
    g_last_error = "k must be >= 1";
    return RSD_INVALID_ARGUMENT;
  }
  return run(out, [&] { return cmd_construct(doc->doc, k, parse_params(params)); });
}

rsd_status rsd_span(const rsd_document* doc, rsd_report** out) {
  if (!doc) {
    g_last_error = "null document";
    return RSD_INVALID_ARGUMENT;
  }
  return run(out, [&] { return cmd_span(doc->doc); });
}

rsd_status rsd_conductor(const rsd_document* doc, const char* singularity,
                         const char* differential, int k, int trunc, rsd_report** out) {
  if (!singularity) {
    g_last_error = "null singularity name";
    return RSD_INVALID_ARGUMENT;
  }
  if (k < 1) {
    g_last_error = "k must be >= 1";
    return RSD_INVALID_ARGUMENT;
  }
  return run(out, [&] {
    std::optional<std::string> diff;
    if (differential) diff = std::string(differential);
    std::optional<long long> tr;
    if (trunc > 0) tr = trunc;
    return cmd_conductor(doc ? &doc->doc : nullptr, singularity, diff, k, tr);
  });
}

rsd_status rsd_selftest(rsd_report** out) {
  return run(out, [] { return cmd_selftest(); });
}

} // extern "C"

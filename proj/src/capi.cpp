// Copyright 2026 The endokl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "endokl/endokl.h"

#include "endokl/query.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

struct endokl_session {
  std::unique_ptr<endokl::Session> impl;
};

namespace {

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

endokl_status fail(endokl_status status, const std::string& message, char** out_json) {
  if (out_json) {
    endokl::Json err{{"error", {{"status", endokl_status_name(status)}, {"message", message}}}};
    *out_json = duplicate(err.dump());
  }
  return status;
}

}  // namespace

extern "C" {

const char* endokl_version(void) { return "0.1.0"; }

const char* endokl_status_name(endokl_status status) {
  switch (status) {
    case ENDOKL_OK: return "ok";
    case ENDOKL_ERR_DOMAIN: return "domain";
    case ENDOKL_ERR_PARSE: return "parse";
    case ENDOKL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

endokl_session* endokl_session_new(const char* cache_path) {
  std::string path;
  if (cache_path) {
    path = cache_path;
  } else if (const char* env = std::getenv(ENDOKL_CACHE_ENV)) {
    path = env;
  }
  try {
    return new endokl_session{std::make_unique<endokl::Session>(path)};
  } catch (...) {
    return nullptr;
  }
}

void endokl_session_free(endokl_session* session) { delete session; }

endokl_status endokl_session_flush(endokl_session* session) {
  if (!session) return ENDOKL_ERR_INTERNAL;
  try {
    session->impl->flush();
    return ENDOKL_OK;
  } catch (...) {
    return ENDOKL_ERR_INTERNAL;
  }
}

endokl_status endokl_query(endokl_session* session, const char* command,
                           const char* request_json, char** out_json) {
  if (out_json) *out_json = nullptr;
  if (!session || !command || !out_json) return fail(ENDOKL_ERR_INTERNAL, "null argument", out_json);
  try {
    endokl::Json request = request_json && *request_json
                               ? endokl::Json::parse(request_json)
                               : endokl::Json::object();
    endokl::Json result = session->impl->run(command, request);
    *out_json = duplicate(result.dump());
    return ENDOKL_OK;
  } catch (const endokl::DomainError& e) {
    return fail(ENDOKL_ERR_DOMAIN, e.what(), out_json);
  } catch (const endokl::ParseError& e) {
    return fail(ENDOKL_ERR_PARSE, e.what(), out_json);
  } catch (const endokl::Json::parse_error& e) {
    return fail(ENDOKL_ERR_PARSE, e.what(), out_json);
  } catch (const std::exception& e) {
    return fail(ENDOKL_ERR_INTERNAL, e.what(), out_json);
  }
}

void endokl_string_free(char* s) { std::free(s); }

}  // extern "C"

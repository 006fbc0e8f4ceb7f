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

#ifndef ENDOKL_ENDOKL_H_
#define ENDOKL_ENDOKL_H_

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque query session holding a Kazhdan-Lusztig cache. */
typedef struct endokl_session endokl_session;

typedef enum {
  ENDOKL_OK = 0,
  ENDOKL_ERR_DOMAIN = 1,
  ENDOKL_ERR_PARSE = 2,
  ENDOKL_ERR_INTERNAL = 3
} endokl_status;

/* Environment variable naming the default cache file. */
#define ENDOKL_CACHE_ENV "ENDOKL_KL_CACHE"

const char* endokl_version(void);

/* Opens a session. A NULL cache_path falls back to ENDOKL_KL_CACHE; an empty
   string keeps the cache in memory. Returns NULL if the cache file exists but
   cannot be read. */
endokl_session* endokl_session_new(const char* cache_path);

/* Writes the cache back to its file if it changed, then frees the session. */
void endokl_session_free(endokl_session* session);

endokl_status endokl_session_flush(endokl_session* session);

/* Runs one command (roots, weyl, kl, endoscopy, strata, multiplicity,
   character, affine, fold, oracle-check, cache) on a JSON request object.
   On return *out_json holds the result object, or {"error": {"status": ...,
   "message": ...}} on failure; release it with endokl_string_free. */
endokl_status endokl_query(endokl_session* session, const char* command,
                           const char* request_json, char** out_json);

void endokl_string_free(char* s);

/* Human-readable name of a status code. */
const char* endokl_status_name(endokl_status status);

#ifdef __cplusplus
}
#endif

#endif /* ENDOKL_ENDOKL_H_ */

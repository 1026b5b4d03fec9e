#ifndef WHCX_H
#define WHCX_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(WHCX_BUILDING)
#define WHCX_API __attribute__((visibility("default")))
#else
#define WHCX_API
#endif

typedef enum whcx_status {
  WHCX_OK = 0,
  WHCX_FAILED = 1,       /* a check in the report failed */
  WHCX_PARSE = 2,        /* malformed instance or options */
  WHCX_AXIOM = 3,        /* the instance violates an axiom suite */
  WHCX_UNSUPPORTED = 4,  /* the command needs data the instance lacks */
  WHCX_USAGE = 5,        /* bad arguments */
  WHCX_INTERNAL = 6
} whcx_status;

typedef struct whcx_instance whcx_instance;

/* Parse an instance; structural checks only. *out is NULL on failure. */
WHCX_API whcx_status whcx_instance_load(const char* path, whcx_instance** out);
WHCX_API whcx_status whcx_instance_parse(const char* json_text, whcx_instance** out);
WHCX_API void whcx_instance_free(whcx_instance* inst);

/* The instance re-serialized as JSON. Free with whcx_string_free. */
WHCX_API whcx_status whcx_instance_json(const whcx_instance* inst, char** json_out);

/* Run verify | hh | hcoh | whh | whcoh | ss | cyclic | cup | cap.
   options_json may be NULL or an object with nmax, trunc, module, h.
   *report_json receives the report even when the status is not WHCX_OK. */
WHCX_API whcx_status whcx_run(const whcx_instance* inst, const char* command, const char* options_json,
                              char** report_json);

/* Render a report produced by whcx_run as a text table. */
WHCX_API whcx_status whcx_report_table(const char* report_json, char** table_out);

/* Preset instances: group, pair_groupoid, discrete_groupoid, smash. p = 0 for Q. */
WHCX_API whcx_status whcx_build(const char* kind, int n, int p, char** json_out);

WHCX_API void whcx_string_free(char* s);

/* Message of the last failure on this thread; empty when none. */
WHCX_API const char* whcx_last_error(void);

#ifdef __cplusplus
}
#endif

#endif

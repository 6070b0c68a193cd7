#include <stdio.h>
#include "torsion_galois.h"
int main(void) {
  TgCurve *e = NULL; TgPoly *p = NULL; char *s = NULL;
  if (tg_curve_parse("1,0,0,0,-4/13", &e) != TG_STATUS_OK) return 1;
  if (tg_charpoly(e, NULL, 3, TG_METHOD_BOTH, &p) != TG_STATUS_OK) { puts(tg_last_error()); return 1; }
  tg_poly_to_json(p, &s); puts(s); tg_string_free(s);
  tg_poly_free(p); tg_curve_free(e); return 0;
}

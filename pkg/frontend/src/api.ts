// Typed client for the qcluster JSON service.  The explorer never computes
// algebra itself: every polynomial string it shows comes verbatim from
// these payloads.

export interface QuiverVertex {
  id: string;
  frozen: boolean;
  label: string;
}

export interface QuiverData {
  vertices: QuiverVertex[];
  eps2: number[][];
}

export interface ElementTerm {
  a: Record<string, number>;
  coef: string;
}

export interface ElementData {
  seed: string;
  terms: ElementTerm[];
}

export interface PinRender {
  kind: "element" | "tropical";
  status: "ok" | "NotLaurent";
  element?: ElementData;
  text?: string;
  positive?: boolean;
  coords?: Record<string, number>;
}

export interface SessionState {
  id: string;
  history: string[];
  quiver: QuiverData;
  pins: Record<string, PinRender>;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function request<T>(
  base: string,
  path: string,
  init?: RequestInit,
): Promise<T> {
  const res = await fetch(base + path, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const body = await res.text();
  if (!res.ok) {
    let detail = body;
    try {
      detail = JSON.parse(body).detail ?? body;
    } catch {
      /* raw body */
    }
    throw new ApiError(res.status, String(detail));
  }
  return JSON.parse(body) as T;
}

export class Client {
  constructor(public base: string) {}

  createSession(spec: {
    type?: string;
    word?: string;
    shape?: string;
    seed?: QuiverData;
  }): Promise<{ id: string }> {
    return request(this.base, "/session", {
      method: "POST",
      body: JSON.stringify(spec),
    });
  }

  state(id: string): Promise<SessionState> {
    return request(this.base, `/session/${id}`);
  }

  mutate(id: string, vertex: string): Promise<SessionState> {
    return request(this.base, `/session/${id}/mutate`, {
      method: "POST",
      body: JSON.stringify({ vertex }),
    });
  }

  undo(id: string): Promise<SessionState> {
    return request(this.base, `/session/${id}/undo`, { method: "POST" });
  }

  pinGenerator(id: string, name: string, generator: string): Promise<SessionState> {
    return request(this.base, `/session/${id}/pin`, {
      method: "POST",
      body: JSON.stringify({ name, kind: "generator", generator }),
    });
  }

  pinTropical(
    id: string,
    name: string,
    coords: Record<string, number>,
  ): Promise<SessionState> {
    return request(this.base, `/session/${id}/pin`, {
      method: "POST",
      body: JSON.stringify({ name, kind: "tropical", coords }),
    });
  }

  verify(id: string, quotient = false): Promise<{ ok: boolean; cases: unknown[] }> {
    return request(this.base, `/session/${id}/verify`, {
      method: "POST",
      body: JSON.stringify({ quotient }),
    });
  }
}

// ViewState and the undo timeline.  All algebra lives on the server; the
// state stores the server's payloads verbatim plus pure view concerns
// (layout, selection, timeline cursor).

import { Client, type PinRender, type SessionState } from "./api.js";
import { initialLayout, relaxLayout, type Layout } from "./layout.js";

export interface TimelineEntry {
  vertex: string;
}

export interface ViewState {
  sessionId: string;
  server: SessionState;
  layout: Layout;
  draggedIds: Set<string>;
  selection: string | null;
  // timeline of performed mutations with an undo cursor; entries past the
  // cursor are redoable
  timeline: TimelineEntry[];
  cursor: number;
}

export function pinRenderText(pin: PinRender): string {
  if (pin.status === "NotLaurent") {
    return "not Laurent in this chart";
  }
  if (pin.kind === "tropical") {
    return JSON.stringify(pin.coords ?? {});
  }
  return pin.text ?? "";
}

export class Explorer {
  constructor(public client: Client) {}

  async load(spec: { type: string; word: string; shape?: string }): Promise<ViewState> {
    const { id } = await this.client.createSession({
      shape: "disk",
      ...spec,
    });
    const server = await this.client.state(id);
    const layout = relaxLayout(server.quiver, initialLayout(server.quiver));
    return {
      sessionId: id,
      server,
      layout,
      draggedIds: new Set(),
      selection: null,
      timeline: [],
      cursor: 0,
    };
  }

  private merge(state: ViewState, server: SessionState): ViewState {
    // layout is keyed by stable vertex ids, so positions survive mutation
    return { ...state, server };
  }

  async clickMutate(state: ViewState, vertex: string): Promise<ViewState> {
    const server = await this.client.mutate(state.sessionId, vertex);
    const timeline = state.timeline.slice(0, state.cursor);
    timeline.push({ vertex });
    return {
      ...this.merge(state, server),
      timeline,
      cursor: timeline.length,
      selection: vertex,
    };
  }

  async undo(state: ViewState): Promise<ViewState> {
    if (state.cursor === 0) {
      return state;
    }
    const server = await this.client.undo(state.sessionId);
    return { ...this.merge(state, server), cursor: state.cursor - 1 };
  }

  async redo(state: ViewState): Promise<ViewState> {
    if (state.cursor >= state.timeline.length) {
      return state;
    }
    const entry = state.timeline[state.cursor];
    const server = await this.client.mutate(state.sessionId, entry.vertex);
    return { ...this.merge(state, server), cursor: state.cursor + 1 };
  }

  async pinGenerator(state: ViewState, name: string, generator: string): Promise<ViewState> {
    const server = await this.client.pinGenerator(state.sessionId, name, generator);
    return this.merge(state, server);
  }

  async pinTropical(
    state: ViewState,
    name: string,
    coords: Record<string, number>,
  ): Promise<ViewState> {
    const server = await this.client.pinTropical(state.sessionId, name, coords);
    return this.merge(state, server);
  }

  dragVertex(state: ViewState, id: string, x: number, y: number): ViewState {
    const layout = new Map(state.layout);
    layout.set(id, { x, y });
    const dragged = new Set(state.draggedIds);
    dragged.add(id);
    return { ...state, layout, draggedIds: dragged };
  }
}

/** Snapshot used to compare view states (ignores transient selection). */
export function viewSnapshot(state: ViewState): string {
  const pins: Record<string, string> = {};
  for (const [name, pin] of Object.entries(state.server.pins)) {
    pins[name] = JSON.stringify(pin);
  }
  return JSON.stringify({
    history: state.server.history,
    quiver: state.server.quiver,
    pins,
    cursor: state.cursor,
  });
}

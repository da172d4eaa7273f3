import { ApiError, Client } from "./api.js";
import { GraphView } from "./graphView.js";
import { PatternTable } from "./patternTable.js";
import { buildScene } from "./scene.js";
import { StatsPanel } from "./statsPanel.js";
import { clampMinSupport, debounce, defaultViewState, LatestWins } from "./state.js";
import type { GraphPayload, UserRow, WeightMode } from "./types.js";
import { UploadPanel } from "./uploadPanel.js";

const SLIDER_DEBOUNCE_MS = 250;

function byId<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

function showToast(message: string, kind: "ok" | "error"): void {
  const host = byId<HTMLDivElement>("toasts");
  const toast = document.createElement("div");
  toast.className = `toast toast-${kind}`;
  toast.textContent = message;
  host.appendChild(toast);
  setTimeout(() => toast.remove(), 4000);
}

function main(): void {
  const client = new Client("");
  const state = defaultViewState();

  const userList = byId<HTMLUListElement>("user-list");
  const supportSlider = byId<HTMLInputElement>("min-support");
  const supportValue = byId<HTMLSpanElement>("min-support-value");
  const gapSelect = byId<HTMLSelectElement>("max-gap");
  const versionTag = byId<HTMLSpanElement>("snapshot-version");

  const graphView = new GraphView(byId("graph-panel"));
  const statsPanel = new StatsPanel(byId("stats-panel"));
  const patternTable = new PatternTable(byId("pattern-panel"), (items) => {
    graphView.highlight(items);
  });
  new UploadPanel(byId("upload-panel"), client, () => void loadUsers(), showToast);

  let currentGraph: GraphPayload | null = null;
  const userQueries = new LatestWins();
  const graphQueries = new LatestWins();
  const patternQueries = new LatestWins();
  const statsQueries = new LatestWins();

  const noteVersion = (version: number): void => {
    state.lastSnapshotVersion = version;
    versionTag.textContent = `snapshot v${version}`;
  };

  const fail = (err: unknown): void => {
    if (err instanceof DOMException && err.name === "AbortError") return;
    showToast(err instanceof ApiError ? err.message : "Request failed.", "error");
  };

  const renderGraph = (): void => {
    if (!currentGraph || !state.selectedUser) return;
    graphView.render(buildScene(currentGraph, state.weightMode, state.selectedUser));
  };

  const loadGraph = (): void => {
    if (!state.selectedUser) return;
    const { token, signal } = graphQueries.begin();
    client.graph(state.selectedUser, signal).then(({ data, version }) => {
      if (!graphQueries.isCurrent(token)) return;
      noteVersion(version);
      currentGraph = data;
      renderGraph();
    }, fail);
  };

  const loadPatterns = (): void => {
    if (!state.selectedUser) return;
    const { token, signal } = patternQueries.begin();
    client
      .patterns(state.selectedUser, { minSupport: state.minSupport, maxGap: state.maxGap }, signal)
      .then(({ data, version }) => {
        if (!patternQueries.isCurrent(token)) return;
        noteVersion(version);
        patternTable.update(data);
      }, fail);
  };

  const loadStats = (): void => {
    if (!state.selectedUser) return;
    const { token, signal } = statsQueries.begin();
    client.stats(state.selectedUser, signal).then(({ data, version }) => {
      if (!statsQueries.isCurrent(token)) return;
      noteVersion(version);
      statsPanel.update(data);
    }, fail);
  };

  const selectUser = (userId: string): void => {
    state.selectedUser = userId;
    for (const item of userList.querySelectorAll("li")) {
      item.classList.toggle("selected", item.dataset.user === userId);
    }
    loadGraph();
    loadPatterns();
    loadStats();
  };

  const renderUsers = (rows: UserRow[]): void => {
    userList.replaceChildren();
    for (const row of rows) {
      const item = document.createElement("li");
      item.dataset.user = row.user_id;
      item.classList.toggle("selected", row.user_id === state.selectedUser);
      const name = document.createElement("span");
      name.className = "user-name";
      name.textContent = row.user_id;
      const count = document.createElement("span");
      count.className = "user-count";
      count.textContent = `${row.record_count}`;
      item.append(name, count);
      item.addEventListener("click", () => selectUser(row.user_id));
      userList.appendChild(item);
    }
  };

  async function loadUsers(): Promise<void> {
    const { token, signal } = userQueries.begin();
    try {
      const { data, version } = await client.listUsers(signal);
      if (!userQueries.isCurrent(token)) return;
      noteVersion(version);
      renderUsers(data);
      const first = data[0];
      if (state.selectedUser && data.some((r) => r.user_id === state.selectedUser)) {
        selectUser(state.selectedUser); // refresh panels against the new snapshot
      } else if (first) {
        selectUser(first.user_id);
      }
    } catch (err) {
      fail(err);
    }
  }

  const requery = debounce(() => loadPatterns(), SLIDER_DEBOUNCE_MS);
  supportSlider.addEventListener("input", () => {
    state.minSupport = clampMinSupport(Number(supportSlider.value));
    supportValue.textContent = String(state.minSupport);
    requery();
  });
  gapSelect.addEventListener("change", () => {
    state.maxGap = gapSelect.value === "" ? null : Number(gapSelect.value);
    loadPatterns();
  });
  for (const radio of document.querySelectorAll<HTMLInputElement>("input[name=weight-mode]")) {
    radio.addEventListener("change", () => {
      if (!radio.checked) return;
      state.weightMode = radio.value as WeightMode;
      renderGraph(); // same payload, new encoding; no refetch
    });
  }

  supportValue.textContent = String(state.minSupport);
  void loadUsers();
}

main();

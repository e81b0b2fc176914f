import init, { build_view, shortest_path } from "./pkg/ikg_wasm.js";

const el = (id) => document.getElementById(id);
const canvas = el("canvas");
const ctx = canvas.getContext("2d");
const tooltip = el("tooltip");

const COMPONENT_COLORS = [
  "#3566c4", "#c4543d", "#3d9a5f", "#9a5fc0", "#c49a2f",
  "#3aa0a8", "#b34f85", "#6b7280",
];

let view = null;        // parsed JSON from build_view
let selection = [];     // clicked node indices (<= 2)
let route = null;       // parsed JSON from shortest_path
let hover = -1;

function params() {
  return {
    family: el("family").value,
    n: Math.max(1, el("n").valueAsNumber || 1),
    parts: el("parts").value,
    k: Number.isFinite(el("k").valueAsNumber) ? el("k").valueAsNumber : -1,
    includeEmpty: el("includeEmpty").checked,
  };
}

function rebuild() {
  const p = params();
  el("partsRow").style.display = p.family === "multipartite" ? "" : "none";
  selection = [];
  route = null;
  el("route").style.display = "none";
  try {
    view = JSON.parse(build_view(p.family, p.n, p.parts, p.k, p.includeEmpty));
    showError(null);
  } catch (e) {
    view = null;
    showError(e);
  }
  renderStats();
  draw();
}

function showError(e) {
  const box = el("error");
  if (e === null) {
    box.style.display = "none";
  } else {
    box.textContent = String(e);
    box.style.display = "";
  }
}

function renderStats() {
  const box = el("stats");
  if (!view) { box.innerHTML = ""; return; }
  const ham = view.hamiltonian;
  const rows = [
    ["base graph", `${view.family} &mdash; ${view.base.n} vertices, ${view.base.m} edges`],
    ["bound k", `${view.k} (&alpha; = ${view.alpha})`],
    ["order / size", `${view.order} / ${view.size}`],
    ["components", `${view.components}`],
    ["parity classes", `even ${view.bipartition.even}, odd ${view.bipartition.odd}`],
    ["girth", view.girth === null ? "acyclic" : `${view.girth}`],
    view.degrees
      ? ["degrees", `${view.degrees.min}&ndash;${view.degrees.max}${view.degrees.regular ? " (regular)" : ""}`]
      : ["degrees", "&mdash;"],
    ["forest / tree", `${view.forest.is_forest} / ${view.forest.is_tree}`],
    ["Hamiltonian", `${ham.status} (${ham.method.replaceAll("_", " ")})`],
    ["independence polynomial", `<span id="poly">[${view.polynomial.join(", ")}]</span>`],
    ["sets at 1 / &minus;1", `${view.at_one} / ${view.at_minus_one}`],
  ];
  box.innerHTML = "<table>" +
    rows.map(([k, v]) => `<tr><td>${k}</td><td>${v}</td></tr>`).join("") +
    "</table>";
}

function geometry() {
  const w = canvas.clientWidth, h = canvas.clientHeight;
  const pad = 30;
  return {
    w, h,
    px: (x) => pad + x * (w - 2 * pad),
    py: (y) => pad + y * (h - 2 * pad),
  };
}

function nodeRadius() {
  if (!view) return 4;
  return view.order <= 30 ? 11 : view.order <= 120 ? 7 : view.order <= 600 ? 4 : 2.5;
}

function draw() {
  const dpr = window.devicePixelRatio || 1;
  canvas.width = canvas.clientWidth * dpr;
  canvas.height = canvas.clientHeight * dpr;
  ctx.setTransform(dpr, 0, 0, dpr, 0, 0);
  ctx.clearRect(0, 0, canvas.clientWidth, canvas.clientHeight);
  if (!view) return;

  const { px, py } = geometry();
  const r = nodeRadius();
  const onRoute = new Set(route ? route.indices : []);
  const routeEdges = new Set();
  if (route) {
    for (let i = 1; i < route.indices.length; i++) {
      const [a, b] = [route.indices[i - 1], route.indices[i]];
      routeEdges.add(a < b ? `${a}-${b}` : `${b}-${a}`);
    }
  }

  ctx.lineWidth = 1;
  for (const [a, b] of view.edges) {
    const key = `${a}-${b}`;
    ctx.strokeStyle = routeEdges.has(key) ? "#e0762e" : "rgba(29,34,48,0.18)";
    ctx.lineWidth = routeEdges.has(key) ? 2.5 : 1;
    ctx.beginPath();
    ctx.moveTo(px(view.nodes[a].x), py(view.nodes[a].y));
    ctx.lineTo(px(view.nodes[b].x), py(view.nodes[b].y));
    ctx.stroke();
  }

  view.nodes.forEach((node, i) => {
    const x = px(node.x), y = py(node.y);
    ctx.beginPath();
    ctx.arc(x, y, selection.includes(i) || i === hover ? r + 2 : r, 0, 2 * Math.PI);
    ctx.fillStyle = onRoute.has(i)
      ? "#e0762e"
      : COMPONENT_COLORS[node.component % COMPONENT_COLORS.length];
    ctx.fill();
    if (selection.includes(i)) {
      ctx.strokeStyle = "#1d2230";
      ctx.lineWidth = 2;
      ctx.stroke();
    }
    if (view.order <= 30) {
      ctx.fillStyle = "#1d2230";
      ctx.font = "11px ui-monospace, Menlo, Consolas, monospace";
      ctx.textAlign = "center";
      ctx.fillText(node.label, x, y - r - 4);
    }
  });
}

function nodeAt(mx, my) {
  if (!view) return -1;
  const { px, py } = geometry();
  const r = nodeRadius() + 4;
  for (let i = view.nodes.length - 1; i >= 0; i--) {
    const dx = px(view.nodes[i].x) - mx, dy = py(view.nodes[i].y) - my;
    if (dx * dx + dy * dy <= r * r) return i;
  }
  return -1;
}

function setSpec(node) {
  return node.members.length === 0 ? "empty" : node.members.join(",");
}

function onClick(ev) {
  const rect = canvas.getBoundingClientRect();
  const i = nodeAt(ev.clientX - rect.left, ev.clientY - rect.top);
  if (i < 0) { selection = []; route = null; el("route").style.display = "none"; draw(); return; }
  selection.push(i);
  if (selection.length > 2) selection = [i];
  route = null;
  if (selection.length === 2) {
    const p = params();
    const [a, b] = selection.map((j) => view.nodes[j]);
    try {
      const res = JSON.parse(
        shortest_path(p.family, p.n, p.parts, p.k, p.includeEmpty, setSpec(a), setSpec(b)),
      );
      const box = el("route");
      box.style.display = "";
      if (res.unreachable) {
        box.textContent = `${a.label} ↛ ${b.label}: unreachable (different components)`;
      } else {
        route = res;
        box.textContent = `${res.length} steps: ${res.labels.join(" → ")}`;
      }
    } catch (e) {
      showError(e);
    }
  }
  draw();
}

function onMove(ev) {
  const rect = canvas.getBoundingClientRect();
  const i = nodeAt(ev.clientX - rect.left, ev.clientY - rect.top);
  if (i !== hover) {
    hover = i;
    draw();
  }
  if (i >= 0) {
    const node = view.nodes[i];
    tooltip.style.display = "";
    tooltip.style.left = `${ev.clientX - rect.left + 14}px`;
    tooltip.style.top = `${ev.clientY - rect.top + 8}px`;
    tooltip.textContent = `${node.label} · size ${node.size} · degree ${node.degree}`;
  } else {
    tooltip.style.display = "none";
  }
}

async function main() {
  await init();
  for (const id of ["family", "n", "k", "parts", "includeEmpty"]) {
    el(id).addEventListener("change", rebuild);
  }
  canvas.addEventListener("click", onClick);
  canvas.addEventListener("mousemove", onMove);
  window.addEventListener("resize", draw);
  rebuild();
}

main();

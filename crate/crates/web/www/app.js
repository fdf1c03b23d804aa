import init, { thresholdCurves, finderTrace, exhaustiveCheck } from "./pkg/hyperpath_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function guard(out, f) {
  try {
    f();
    out.classList.remove("error");
  } catch (e) {
    out.textContent = String(e.message ?? e);
    out.classList.add("error");
  }
}

function plot(curves) {
  const canvas = $("c-plot");
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const pad = 44;
  ctx.clearRect(0, 0, w, h);
  const pts = curves.points;
  const series = [
    { key: "threshold", color: "#c0392b", label: "threshold" },
    { key: "extremal", color: "#2471a3", label: curves.family + " min degree" },
    { key: "g_bound", color: "#7d8c2a", label: "g(n, t)" },
  ];
  const ys = pts.flatMap((p) => series.map((s) => p[s.key]).filter((v) => v != null));
  const [x0, x1] = [pts[0].n, pts[pts.length - 1].n];
  const y1 = Math.max(...ys, 1);
  const sx = (n) => pad + ((n - x0) / Math.max(1, x1 - x0)) * (w - 2 * pad);
  const sy = (y) => h - pad - (y / y1) * (h - 2 * pad);

  ctx.strokeStyle = "#888";
  ctx.fillStyle = "#333";
  ctx.font = "12px sans-serif";
  ctx.beginPath();
  ctx.moveTo(pad, pad);
  ctx.lineTo(pad, h - pad);
  ctx.lineTo(w - pad, h - pad);
  ctx.stroke();
  ctx.fillText(`n = ${x0}`, pad, h - pad + 16);
  ctx.fillText(`n = ${x1}`, w - pad - 40, h - pad + 16);
  ctx.fillText(String(y1), 4, pad);

  series.forEach((s, i) => {
    ctx.strokeStyle = s.color;
    ctx.lineWidth = 2;
    ctx.beginPath();
    let open = false;
    for (const p of pts) {
      const v = p[s.key];
      if (v == null) { open = false; continue; }
      open ? ctx.lineTo(sx(p.n), sy(v)) : ctx.moveTo(sx(p.n), sy(v));
      open = true;
    }
    ctx.stroke();
    ctx.fillStyle = s.color;
    ctx.fillText(s.label, pad + 10, pad + 14 * i);
  });
  const first = pts.find((p) => p.threshold != null);
  $("c-note").textContent = first
    ? `At n = ${first.n}: threshold ${first.threshold}, ${curves.family} ${first.extremal}.`
    : "The guarantee starts above this range.";
}

function runCurves() {
  guard($("c-note"), () => plot(JSON.parse(thresholdCurves(num("c-t"), num("c-min"), num("c-max")))));
}

function runFinder() {
  const out = $("f-out");
  guard(out, () => {
    const r = JSON.parse(finderTrace(num("f-n"), num("f-d"), num("f-t"), num("f-seed")));
    const lines = [
      `edges ${r.edges}, min degree ${r.min_degree}, threshold ${r.threshold} (${r.promised ? "met" : "not met"})`,
      ...r.trace.map((s, i) => `${String(i).padStart(3)}  ${s.kind.padEnd(22)} length ${s.length}  |M| ${s.m}`),
      r.path ? `path: ${r.path.join(" ")}` : `stopped: ${r.violation}`,
    ];
    if (r.oracle != null) lines.push(`exact search: ${r.oracle ? "present" : "absent"}`);
    out.textContent = lines.join("\n");
  });
}

function runExhaustive() {
  const out = $("e-out");
  out.textContent = "Checking...";
  setTimeout(() => guard(out, () => {
    const r = JSON.parse(exhaustiveCheck(num("e-n"), num("e-d"), num("e-t")));
    out.textContent = `${r.total} graphs with min degree >= ${r.min_degree}; ` +
      `${r.passed} contain a path of length ${r.t}, ${r.failed} do not.`;
  }), 0);
}

await init();
$("status").textContent = "";
$("c-run").onclick = runCurves;
$("f-run").onclick = runFinder;
$("e-run").onclick = runExhaustive;
runCurves();
runFinder();

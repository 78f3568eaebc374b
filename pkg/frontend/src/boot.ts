import { createApp } from "./main.js";

const mount = document.getElementById("app");
if (!mount) {
  throw new Error("missing #app mount node");
}
const app = createApp(mount);
app.bind();
void app.render();
